"""
Utility modules for lambda_trees.
"""
