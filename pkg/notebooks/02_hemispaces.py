"""Assembling hemispaces from faces and checking them for convexity."""
# %%
from hemispaces import (
    TypeISplit,
    all_index_sets,
    assemble,
    check_hemispace,
    contains,
    point,
    signature,
    validate_hyperplane,
    validate_partition,
)
from hemispaces.verify import degenerate_pair, nonnegative_half_line

H = validate_hyperplane(2, {1, 2})
owned = {frozenset({3}), frozenset({1, 3})}
part = validate_partition(H, owned, all_index_sets(H) - owned)
inside, outside = assemble(H, part)
print(inside.dumps())
print(contains(inside, point(0, -1)), contains(inside, point(1, 0)))

# %% A union of faces that is not union-closed is rejected with a witness
try:
    bad = {frozenset({1}), frozenset({2})}
    validate_partition(H, bad, all_index_sets(H) - bad)
except ValueError as e:
    print("rejected:", e)

# %% The sampled convexity oracle
print(check_hemispace(inside, trials=300).to_json())
print(check_hemispace(outside, trials=300).to_json())

# %% A hyperplane with both extra faces: x1 = x2, x3 = -inf in R^4_max
for split in (TypeISplit.ALL_TO_FIRST, nonnegative_half_line()):
    first, second = degenerate_pair(split, True)
    print(first.dumps())
    print("  convex:", check_hemispace(first, 300).passed, check_hemispace(second, 300).passed)

# %% Membership bits over the grid {-inf,-2,-1,0,1,2}^2
print(signature(inside))
