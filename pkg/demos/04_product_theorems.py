"""Product theorems evaluated on factors only, then checked against the oracle."""

from domkit import (
    build_standard,
    characterize_total,
    corollary_value,
    product_gamma,
    verify_against_oracle,
)

P = lambda n: build_standard("path", n)  # noqa: E731
C = lambda n: build_standard("cycle", n)  # noqa: E731

# Membership of the product in the total-[1,2] class, decided from the factors.
for g, h, name in [(P(4), P(5), "P4 o P5"), (C(5), C(4), "C5 o C4"), (P(1), P(4), "K1 o P4")]:
    a = characterize_total(g, h, 2)
    print(f"{name}: member={a.membership}  condition={a.matched_condition}")

# Minimum sizes predicted from factor solves alone.
print()
for g, h, kind, name in [
    (P(4), P(4), "one_2", "gamma_[1,2](P4 o P4)"),
    (C(5), C(4), "one_2", "gamma_[1,2](C5 o C4)"),
    (P(3), C(4), "plain", "gamma(P3 o C4)"),
    (C(5), C(3), "total_one_2", "gamma_t[1,2](C5 o C3)"),
]:
    a = product_gamma(g, h, kind)
    value = a.predicted_gamma if a.membership else "does not exist"
    print(f"{name} = {value}   [{a.matched_condition}]")

# Every prediction above can be replayed against the explicit product; the
# report keeps both sides instead of asserting.
print()
report = verify_against_oracle(C(5), C(4), "one_2")
print("C5 o C4 cross-check:", report.to_json())

# The closed corollary table for path/cycle products.
print()
print("gamma_[1,2](P_n o P_4) for n = 2..8:",
      [corollary_value("path", "path", n, 4, "one_2") for n in range(2, 9)])
print("gamma_i[1,2](C_n o C_4) for n = 3..9:",
      [corollary_value("cycle", "cycle", n, 4, "i_one_2") for n in range(3, 10)])
