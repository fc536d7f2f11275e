"""
Entry point scripts for gorext.
"""
