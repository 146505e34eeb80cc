"""Settings, logging and JSON schemas shared by the workbench commands."""
