"""
Test suite for Bipartite Games.
"""
