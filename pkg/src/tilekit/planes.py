"""Named codes: the twenty twin-pair-free planes and a few worked examples."""
from __future__ import annotations

from .core import Code, code

# uppercase = primed letter
_PLANES = {
    1: "a*aa a**A A*a* A*AA **Aa",
    2: "aaAa aa*A AaaA AaA* *aaa *A**",
    3: "a*aA a**a AaaA Aa*a AAa* AAAa **AA",
    4: "aaaA a*A* AaAa Aa*A AAA* *AaA **aa",
    5: "aa*A aAA* a*aa Aaa* AA*a A*AA *aAa *AaA",
    6: "aaaa aaA* aA*A Aa*a AAaA A*AA *aaA *A*a",
    7: "aaaa aAAA aA*a a*aA AaaA AAAa AA*A A*aa *aA*",
    8: "aaaa aA*a AAAa A*aa *aA* bAAA b*aA BaaA BA*A",
    9: "aaaa aA*a a**A AAAa Abaa Ab*A ABa* ABAA *aAa",
    10: "aaaa a*Aa Aa*a AAAa ba*A bAa* bAAA BAaa B**A",
    11: "aaaa aa*A aAAb aA*B Aaab AAAa A*aB A*AA *aAa *Aab",
    12: "aaaa a*Aa Aa*a AAAa *Aaa *baA b*AA bBaA BbAA BB*A",
    13: "aaaa a*Aa Aa*a AAAa *Aaa *AAA ba*A bAaA BaAA B*aA",
    14: "aaaa a*Aa ab*A aBBA Aa*a AAAa A*BA AbbA *Aaa *BbA",
    15: "aaaa a*Aa Aa*a AAAa *Aaa *bBA b*bA bBBA BbbA BB*A",
    16: "aaaa aaAb aAA* a*aA AaaB Aa*b AAAa AA*A *aAB *Aaa",
    17: "aaaa aAaA aA*a a*AA AaAA AAAa AA*A A*aa *aaA *aAa",
    18: "aaaa a*Aa abaA aB*A Aa*a AAAa A*aA ABAA *Aaa *bAA",
    19: "aaaa aaBA aAba aAB* abbA AAAa A*aa Ab*A ABBA *aAa *BbA",
    20: "aaaa aabA aAb* aABa aBBA AAAa Abaa AbbA ABa* ABAA *aAa *bBA",
    21: "a*** A***",
}


def plane(i: int) -> Code:
    """The plane code ``C^i`` (1..21); 21 is the layered ``{l***, l'***}``."""
    return code(_PLANES[i])


PLANES: dict[int, Code] = {i: plane(i) for i in _PLANES}

# the cube tiling code of the gluing example and its twin-pair-free reduct
GLUE_EXAMPLE = code("aaa abA aBA Aab AaB AAA bAa BAa")
GLUE_EXAMPLE_REDUCT = code("aaa a*A Aa* AAA *Aa")


def v_c10(l: int, p: int, q: int, s: int) -> Code:
    """General form of a code made on the plane of ``C^10`` (pairs ``l, p, q, s``)."""
    L, P, Q, S = (chr(ord("a") + x) for x in (l, p, q, s))
    lp, pp, qp, sp = (x.upper() for x in (L, P, Q, S))
    words = ["aaaa", f"a{S}Aa", f"a{sp}Aa", f"Aa{Q}a", f"Aa{qp}a", "AAAa",
             f"ba{P}A", f"ba{pp}A", f"bAa{Q}", f"bAa{qp}", "bAAA", "BAaa",
             f"B{L}{S}A", f"B{lp}{S}A", f"B{L}{sp}A", f"B{lp}{sp}A"]
    return code(words)


# F^{1,c} and F^{1,c'} for the six forms of a twin-pair-free five-dimensional
# code with three pairs at the first position
FIVE_DIM_FORMS: dict[int, tuple[Code, Code]] = {
    i: (code(x), code(y)) for i, (x, y) in {
        1: ("ca**a caaaA", "Ca*Aa Caaa* CaAaa"),
        2: ("ca*Aa ca*bA caaBA", "CaaA* CaaaA CaAAa CaAbA"),
        3: ("ca*aa caa*A caAAA", "Ca*AA Caaa* CaAaa"),
        4: ("c*aaa ca*Ab caaaA", "Caa*b CaaaB CaAAb CAaaa"),
        5: ("ca*aa caa*A", "Caaa* CaAaa CaaAA"),
        6: ("ca*aa caaAa", "Caa*a CaAaa"),
    }.items()
}
