# Configuration file for the Sphinx documentation builder.
#
# For the full list of options see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import importlib

# -- Project information -----------------------------------------------------

project = 'hardylab'
copyright = '2026, the hardylab developers'
author = 'the hardylab developers'
version = '0.1'
release = '0.1.0.dev1'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autosectionlabel',
    'sphinx-jsonschema',
    'sphinx_rtd_theme'
]

exclude_patterns = []

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

# -- JSONSchema tables -------------------------------------------------------

sjs_wide_format = importlib.import_module("sphinx-jsonschema.wide_format")


def patched_run(self, schema, pointer=''):
    # $id and additionalProperties are not rendered
    for key in ('$id', 'additionalProperties'):
        schema.pop(key, None)
    if 'required' in schema and 'properties' in schema:
        required = {p: schema['properties'].pop(p) for p in schema['required']
                    if p in schema['properties']}
        schema['properties'] = {**required, **schema['properties']}
    return original_run(self, schema, pointer)


original_run = sjs_wide_format.WideFormat.run
sjs_wide_format.WideFormat.run = patched_run
