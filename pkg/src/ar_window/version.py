__version__ = "0.3.1"
VERSION = __version__
