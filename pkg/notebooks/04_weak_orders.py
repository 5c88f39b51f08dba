"""Weak orders on [m] and union-closed splittings of its nonempty subsets."""
# %%
from hemispaces import enumerate_splittings, enumerate_weak_orders, splitting_to_weak_order, weak_order_to_splitting

for w in enumerate_weak_orders(3)[:5]:
    s = weak_order_to_splitting(w)
    print(w.to_json(), "->", s.to_json()["C"])
    assert splitting_to_weak_order(s) == w

# %%
for m in range(1, 6):
    ws = enumerate_weak_orders(m)
    image = {weak_order_to_splitting(w) for w in ws}
    print(m, len(ws), len(image), image == set(enumerate_splittings(m)))
