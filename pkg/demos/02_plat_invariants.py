"""
Plat closures and their brackets
================================

Cap the top and bottom of a 4-strand braid in pairs and compute the number
of components and the Kauffman bracket. The signature normalizes the bracket
by the writhe of every relative orientation, which makes it survive Hilden
moves.
"""

from platorder import component_count, kauffman_bracket_plat, parse_word, plat_signature

for text, name in [("", "2-component unlink"), ("2", "unknot"),
                   ("2 2", "Hopf link"), ("2 2 2", "trefoil")]:
    w = parse_word(text, 4)
    print(f"{name:>20}: components {component_count(w)}, bracket {kauffman_bracket_plat(w)}")

# sigma_1 is a twist of a cap: it changes the bracket but not the signature
w = parse_word("2 2 2", 4)
twisted = parse_word("1 2 2 2 1", 4)
print("bracket changes:", kauffman_bracket_plat(w) != kauffman_bracket_plat(twisted))
print("signature kept :", plat_signature(w) == plat_signature(twisted))
print(plat_signature(w).to_json())
