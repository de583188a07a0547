"""movescene: a headless, deterministic direct-manipulation 2D engine.

Every scene element is movable, resizable, reconfigurable and (where it
makes sense) rotatable through press-move-release, and every visual
parameter persists. The engine is driven by pointer events and commands,
renders to plain drawing-primitive lists, and replays event scripts
byte-deterministically.
"""

from .geometry import Point, Rect
from .scene import Scene, SceneSettings
from .persistence import load_scene, save_scene

__version__ = "0.1.0"

__all__ = [
    "Point",
    "Rect",
    "Scene",
    "SceneSettings",
    "load_scene",
    "save_scene",
    "__version__",
]
