"""Symbolic lexical semantics: ontology induction, concept similarity,
metonymy resolution, and masked-completion acquisition.

Everything lives in the compiled extension; this package just re-exports it.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError as exc:  # pragma: no cover
    raise ImportError(
        "lexont._core is not built; install the package with pip or add the "
        "CMake build's python/ directory to PYTHONPATH"
    ) from exc
