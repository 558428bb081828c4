"""
Utils module - Contains input resolution and logging helpers.
"""
