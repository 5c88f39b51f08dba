"""Faces of a max-plus hyperplane.

Run with ``python3 notebooks/01_faces.py``.
"""
# %% The hyperplane x1 ⊕ x2 = 0 in R^2_max
from hemispaces import classify, face_catalog, face_conditions, point, segment_face_trace, validate_hyperplane

H = validate_hyperplane(2, {1, 2})
print(H)

# %% Its seven faces, one per nonempty set of tied terms.  Index 3 is the constant 0.
for f in face_catalog(H):
    print(f"{f!r:12} {' and '.join(face_conditions(H, f))}")

# %% Every point lands in exactly one face
for p in [point(1, 0), point(-5, -3), point(0, 0), point("-inf", 2)]:
    print(p, "->", classify(H, p))

# %% Walking along a max-plus segment visits the faces in order
x, y = point(2, "-inf"), point("-inf", 3)
diag = validate_hyperplane(2, {1}, {2}, alpha=False)
print(segment_face_trace(diag, x, y))
