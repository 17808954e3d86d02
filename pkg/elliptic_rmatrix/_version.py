"""Module to store version so it can be imported in other modules."""
__version__ = '0.1.0'
