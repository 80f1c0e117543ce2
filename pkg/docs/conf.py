# Sphinx configuration for the Posmat documentation.

from posmat import __version__

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
    "numpydoc",
    "sphinx.ext.autosummary",
]
numpydoc_show_class_members = False

source_suffix = [".rst"]
master_doc = "index"
exclude_patterns = ["_build"]

project = u"Posmat"
copyright = u"2026, the Posmat developers"
version = __version__
release = __version__

html_theme = "press"
pygments_style = "monokai"
htmlhelp_basename = "Posmatdoc"

latex_documents = [
    ("index", "Posmat.tex", u"Posmat Documentation", u"the Posmat developers", "manual")
]
man_pages = [("index", "posmat", u"Posmat Documentation", [u"the Posmat developers"], 1)]
