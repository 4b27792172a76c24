"""Information, emergence and cognitive-augmentation metrics with a CA bench."""

__version__ = "0.1.0"
