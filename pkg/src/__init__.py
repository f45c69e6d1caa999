"""spatial-dom - complete and sufficient spatial domination for rectangles."""

__version__ = "0.1.0"
