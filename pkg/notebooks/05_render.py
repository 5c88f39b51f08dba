"""Draw the faces of an R^2_max hyperplane as SVG, optionally coloured by a hemispace."""
# %%
import sys
from pathlib import Path

from hemispaces import enumerate_face_partitions, render_svg, validate_hyperplane
from hemispaces.hemispace import Hemispace

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
H = validate_hyperplane(2, {1}, {2})      # x1 = x2 ⊕ 0
(out / "faces.svg").write_text(render_svg(H), encoding="utf-8")

part = enumerate_face_partitions(H)[1]
(out / "hemispace.svg").write_text(render_svg(H, Hemispace(part, 0)), encoding="utf-8")
print("wrote", out / "faces.svg", "and", out / "hemispace.svg")
