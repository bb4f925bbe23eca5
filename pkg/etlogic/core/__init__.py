"""Project-wide settings and path resolution."""
