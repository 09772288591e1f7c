"""Truncated sequence-space models of the classical generator pairs.

Downsampling D_i and upsampling U_i realize the rank-one-to-rank-n
isomorphisms; the left and right shifts realize the Toeplitz generators.
Matrices are integer and the relations are checked exactly, on the window
where truncation cannot interfere.
"""

from leavitt import toeplitz_model, updown_model

model = updown_model(2, truncation=16)
seq = list(range(17))
print("f          :", seq[:8], "...")
print("D0 f (even):", list(model.apply("D0", seq))[:8], "...")
print("D1 f (odd) :", list(model.apply("D1", seq))[:8], "...")
print("U0 D0 f    :", list(model.up[0] @ model.down[0] @ seq)[:8], "...")

for check in model.check_relations():
    print(f"  {check.name:18} window {check.window:3}  {'ok' if check.ok else 'FAIL'}")

print()
shifts = toeplitz_model(truncation=16)
basis0 = [1] + [0] * 16
print("e0 . S:", list(shifts.apply(basis0, "S"))[:5], "(the shift kills index 0)")
print("e0 . T:", list(shifts.apply(basis0, "T"))[:5])
for check in shifts.check_relations():
    print(f"  {check.name:18} window {check.window:3}  {'ok' if check.ok else 'FAIL'}")
