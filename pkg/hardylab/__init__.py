from hardylab.version import VERSION

__version__ = VERSION
