"""
lambda_trees: exact ordered abelian groups, Lambda-metric spaces, and seeded
checks of the three Lambda-tree axioms.
"""

# SPDX-License-Identifier: (MIT)
__version__ = "0.1.0"
__license__ = "MIT"
