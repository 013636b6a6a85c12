"""Errors shared by both trainers."""


class SingleClassDataset(ValueError):
    """Training requires at least one example of each class."""
