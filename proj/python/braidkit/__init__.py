try:
    from braidkit._core import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _core import *  # noqa: F401,F403  (in-tree build: pymod/ on sys.path)
