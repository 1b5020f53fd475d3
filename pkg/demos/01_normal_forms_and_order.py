"""
Normal forms and the Dehornoy order
===================================

Two words for the same braid get the same left normal form; the Dehornoy
order then sorts braids, not words.
"""

from platorder import dehornoy_compare, dehornoy_sorted, normal_form, parse_word

# sigma_1 sigma_2 sigma_1 and sigma_2 sigma_1 sigma_2 are both the half twist in B_3
a = parse_word("1 2 1", 3)
b = parse_word("2 1 2", 3)
print("Delta_3 keys:", normal_form(a).key, normal_form(b).key)

# a negative letter becomes Delta^-1 times a simple factor
print("sigma_1^-1 in B_3:", normal_form(parse_word("-1", 3)).key)

# lowest index decides: sigma_2 < sigma_1, and sigma_2^-1 < identity < sigma_2
ws = [parse_word(t, 4) for t in ("1", "2", "-2", "", "2 2", "1 -2")]
for w in dehornoy_sorted(ws):
    print(f"{str(w) or '(identity)':>10}  nf {normal_form(w).key}")

print("sigma_2 vs sigma_1:", dehornoy_compare(parse_word("2", 4), parse_word("1", 4)).value)
