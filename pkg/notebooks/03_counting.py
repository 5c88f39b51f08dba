"""Counting centered hemispaces and the ordered Bell numbers."""
# %%
import time

from hemispaces import bell_f, bell_standard, count_hemispaces, census

for n in range(1, 5):
    t0 = time.perf_counter()
    got = count_hemispaces(n)
    print(f"n={n}: {got} hemispaces enumerated, 2 f(n) = {2 * bell_f(n)}  ({time.perf_counter() - t0:.2f} s)")

# %% f(n) is the ordered Bell number of n + 1
print([bell_f(n) for n in range(8)])
print([bell_standard(m) for m in range(1, 9)])

# %% Classifying the n = 3 hemispaces by which low-codimension faces are away from the origin
print(census(3))
