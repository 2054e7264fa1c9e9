"""Normal forms and long-time stability for the hinged beam with stretching
nonlinearity: spectra, resonance certification, fourth/sixth-order normal-form
construction, symplectic integration and the physical stability-time table."""

try:
    from ._beambnf import *  # noqa: F401,F403  (installed package layout)
    from ._beambnf import __version__  # noqa: F401
except ImportError:  # build-tree layout used by the ctest smoke run
    from _beambnf import *  # noqa: F401,F403
    from _beambnf import __version__  # noqa: F401
