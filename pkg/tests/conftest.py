import itertools

import numpy as np
from hypothesis import strategies as st
from scipy.optimize import minimize

from editdist.crg import Crg, matrix
from editdist.graphs import complement, make_named

# named graph corpus used by the orientation oracles
WORD_CORPUS = {
    "F1": make_named("F1"), "F2": make_named("F2"), "W5": make_named("W5"),
    "F1p": make_named("F1p"), "F2p": make_named("F2p"),
    **{f"C{t}": make_named("cycle", t) for t in range(3, 9)},
    **{f"K{n}": make_named("complete", n) for n in range(1, 6)},
    **{f"E{n}": make_named("empty", n) for n in range(1, 5)},
    **{f"P{n}": make_named("path", n) for n in range(2, 7)},
    **{f"crown{n}": make_named("crown", n) for n in range(2, 6)},
    "W4": make_named("wheel", 4), "W6": make_named("wheel", 6),
}

COMP_CORPUS = {
    "F1p": make_named("F1p"), "F2p": make_named("F2p"), "C5": make_named("cycle", 5),
    "co-C6": complement(make_named("cycle", 6)), "co-C7": complement(make_named("cycle", 7)),
    **{f"C{t}": make_named("cycle", t) for t in (3, 4, 6, 8)},
    **{f"K{n}": make_named("complete", n) for n in range(1, 6)},
    **{f"E{n}": make_named("empty", n) for n in range(1, 5)},
    **{f"P{n}": make_named("path", n) for n in range(2, 7)},
    **{f"crown{n}": make_named("crown", n) for n in range(2, 6)},
    "W4": make_named("wheel", 4), "W6": make_named("wheel", 6),
}


def all_crgs(max_k):
    """Every CRG with 1..max_k vertices (labelled, not up to isomorphism)."""
    for k in range(1, max_k + 1):
        npairs = k * (k - 1) // 2
        for vc in itertools.product("wb", repeat=k):
            for ec in itertools.product("wbg", repeat=npairs):
                yield Crg(k, "".join(vc), "".join(ec))


@st.composite
def crgs(draw, min_k=1, max_k=5):
    k = draw(st.integers(min_k, max_k))
    vc = draw(st.text("wb", min_size=k, max_size=k))
    ec = draw(st.text("wbg", min_size=k * (k - 1) // 2, max_size=k * (k - 1) // 2))
    return Crg(k, vc, ec)


densities = st.floats(0.01, 0.99, allow_nan=False)


def multistart_min(K, p, starts=40, seed=0):
    """Independent local-search estimate of min x^T M x over the simplex."""
    M = matrix(K, p)
    k = K.k
    rng = np.random.default_rng(seed)
    cons = ({"type": "eq", "fun": lambda x: x.sum() - 1.0, "jac": lambda x: np.ones_like(x)},)
    best = min(M[i, i] for i in range(k))
    inits = [np.full(k, 1.0 / k)] + list(rng.dirichlet(np.ones(k), size=starts))
    for x0 in inits:
        r = minimize(lambda x: x @ M @ x, x0, jac=lambda x: 2 * M @ x, method="SLSQP",
                     bounds=[(0, 1)] * k, constraints=cons, options={"ftol": 1e-14, "maxiter": 500})
        x = np.clip(r.x, 0, None)
        x /= x.sum()
        best = min(best, float(x @ M @ x))
    return best
