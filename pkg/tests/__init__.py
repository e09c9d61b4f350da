"""
Test Paketi
"""
