import sys
from pathlib import Path

# allow running the tests from a fresh checkout without installing
src = Path(__file__).parent / "src"
try:
    import orbitatlas  # noqa: F401
except ImportError:  # pragma: no cover
    sys.path.insert(0, str(src))
