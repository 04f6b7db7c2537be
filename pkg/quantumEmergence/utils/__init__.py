"""Configuration and file system helpers"""
