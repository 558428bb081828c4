"""
Config module - Contains environment-driven search, sampling, logging and CLI settings.
"""
