project = "quiverdt"
copyright = "2026, quiverdt developers"
author = "quiverdt developers"
extensions = [
    "sphinx_rtd_theme",
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.viewcode",
]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
html_theme = "sphinx_rtd_theme"
master_doc = "index"

autodoc_member_order = "bysource"

doctest_global_setup = """
from quiverdt import Quiver, QRat, MSeries
pair = Quiver([[0, 1], [1, 0]])
two_loops = Quiver([[2]])
"""
