"""Command-line front end and the registry of verification checks."""
