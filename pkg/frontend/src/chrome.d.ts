/** Minimal ambient typing for the extension APIs this project touches
 * (promise-flavored, manifest v3). */

declare namespace chrome {
  namespace storage {
    interface StorageArea {
      get(keys?: string | string[] | null): Promise<Record<string, unknown>>;
      set(items: Record<string, unknown>): Promise<void>;
      remove(keys: string | string[]): Promise<void>;
    }
    const local: StorageArea;
    const session: StorageArea;
  }

  namespace tabs {
    interface Tab {
      id?: number;
      url?: string;
    }
    function query(queryInfo: { active: boolean; currentWindow: boolean }): Promise<Tab[]>;
  }

  namespace action {
    function setBadgeText(details: { text: string }): Promise<void>;
    function setBadgeBackgroundColor(details: { color: string }): Promise<void>;
    function setTitle(details: { title: string }): Promise<void>;
  }

  namespace alarms {
    interface Alarm {
      name: string;
    }
    function create(name: string, alarmInfo: { periodInMinutes: number; delayInMinutes?: number }): void;
    const onAlarm: {
      addListener(callback: (alarm: Alarm) => void): void;
    };
  }

  namespace webRequest {
    interface OnCompletedDetails {
      url: string;
      method: string;
      statusCode: number;
      timeStamp: number;
      tabId: number;
    }
    const onCompleted: {
      addListener(
        callback: (details: OnCompletedDetails) => void,
        filter: { urls: string[] },
      ): void;
    };
  }

  namespace runtime {
    function openOptionsPage(): Promise<void>;
  }
}
