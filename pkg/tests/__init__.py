"""
Test suite for the Deep Research App.
"""
