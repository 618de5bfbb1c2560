"""Shipped fixture suite: eleven rings with modules, complexes, and tasks
expressed in the same declarative form the problem-file reader accepts.

Every task carries an explicit bound so reruns at doubled bounds (the
window-stability check) stay affordable; expected values pinned through
check-* tasks come from the brute-force path where the ring is artinian
and from direct monomial counting otherwise.
"""


def corpus_problems():
    """Fresh list of problem dicts, one per ring."""
    return [p() for p in (_regular_line, _regular_plane, _dual_numbers,
                          _cusp_point, _ci_point, _fat_point,
                          _hypersurface_xy, _semigroup_345, _det_curve,
                          _non_cm_line, _rational_node)]


def _base(name, variables, weights, relations, prime=7):
    return {
        "name": name,
        "field": {"prime": prime} if prime else "rational",
        "ring": {"variables": variables, "weights": weights,
                 "relations": relations},
        "modules": {},
        "complexes": {},
        "maps": {},
        "tasks": [],
    }


def _regular_line():
    p = _base("regular-line", ["x"], [1], [])
    p["modules"]["M"] = {"cyclic": ["x"]}
    p["tasks"] = [
        {"op": "betti", "args": ["k"], "bound": 5},
        {"op": "bass", "args": ["R"], "bound": 5},
        {"op": "check-depth", "args": ["R", 1], "bound": 4},
        {"op": "check-dim", "args": ["R", 1], "bound": 4},
        {"op": "pd", "args": ["k"], "bound": 6},
        {"op": "hilbert", "args": ["R"], "bound": 8},
        {"op": "dualizing", "args": ["R"], "bound": 4},
        {"op": "verify-descent", "args": ["R", "R"], "bound": 5},
        {"op": "verify-auslander-reiten", "args": ["R", "hom-MR"], "bound": 5},
    ]
    return p


def _regular_plane():
    p = _base("regular-plane", ["x", "y"], [1, 1], [])
    p["modules"]["M"] = {"cyclic": ["x"]}
    p["modules"]["S"] = {"syzygy": ["k", 1]}
    p["tasks"] = [
        {"op": "betti", "args": ["k"], "bound": 5},
        {"op": "bass", "args": ["R"], "bound": 5},
        {"op": "check-type", "args": ["R", 1], "bound": 4},
        {"op": "gcdim", "args": ["S", "R"], "bound": 4},
        {"op": "verify-type-formula", "args": ["M", "R"], "bound": 4},
        {"op": "dualizing", "args": ["R"], "bound": 4},
    ]
    return p


def _dual_numbers():
    p = _base("dual-numbers", ["x"], [1], ["x^2"])
    p["complexes"]["Kc"] = {"module": "k", "bound": 6}
    p["complexes"]["K2"] = {"shift": ["Kc", 2]}
    p["complexes"]["KS"] = {"sum": ["Kc", "K2"]}
    p["tasks"] = [
        {"op": "betti", "args": ["k"], "bound": 6},
        {"op": "bass", "args": ["R"], "bound": 6},
        {"op": "check-type", "args": ["R", 1], "bound": 4},
        {"op": "semidualizing", "args": ["R"], "bound": 4},
        {"op": "dualizing", "args": ["R"], "bound": 4},
        {"op": "gcdim", "args": ["k", "R"], "bound": 4},
        {"op": "betti", "args": ["K2"], "bound": 5},
        {"op": "betti", "args": ["KS"], "bound": 5},
        {"op": "verify-type-formula", "args": ["k", "R"], "bound": 4},
        {"op": "verify-descent", "args": ["k", "R"], "bound": 6},
        {"op": "verify-auslander-reiten", "args": ["R", "hom-MR"], "bound": 5},
        {"op": "shift-identity-spot", "args": ["k"], "bound": 4},
    ]
    return p


def _cusp_point():
    p = _base("cusp-point", ["x"], [1], ["x^3"])
    p["modules"]["M"] = {"cyclic": ["x"]}
    p["tasks"] = [
        {"op": "betti", "args": ["k"], "bound": 5},
        {"op": "bass", "args": ["R"], "bound": 5},
        {"op": "check-type", "args": ["R", 1], "bound": 4},
        {"op": "dualizing", "args": ["R"], "bound": 4},
        {"op": "verify-type-formula", "args": ["M", "R"], "bound": 4},
        {"op": "ext", "args": ["M", "k"], "bound": 4},
        {"op": "tor", "args": ["M", "k"], "bound": 4},
    ]
    return p


def _ci_point():
    p = _base("ci-point", ["x", "y"], [1, 1], ["x^2", "y^2"])
    p["modules"]["M"] = {"cyclic": ["x"]}
    p["tasks"] = [
        {"op": "betti", "args": ["k"], "bound": 6},
        {"op": "bass", "args": ["R"], "bound": 5},
        {"op": "check-type", "args": ["R", 1], "bound": 4},
        {"op": "dualizing", "args": ["R"], "bound": 4},
        {"op": "verify-type-formula", "args": ["M", "R"], "bound": 4},
        {"op": "verify-descent", "args": ["R", "R"], "bound": 5},
        {"op": "verify-descent", "args": ["M", "M"], "bound": 6},
        {"op": "verify-auslander-reiten", "args": ["M", "hom-MR"], "bound": 6},
        {"op": "verify-convolution", "args": ["R", "R"], "bound": 4},
        {"op": "shift-identity-spot", "args": ["M"], "bound": 4},
    ]
    return p


def _fat_point():
    p = _base("fat-point", ["x", "y"], [1, 1], ["x^2", "x*y", "y^2"])
    p["modules"]["omega"] = {"canonical": True}
    # resolution ranks double every step here, so bounds stay low enough
    # that the doubled-bound stability rerun is still affordable
    p["tasks"] = [
        {"op": "betti", "args": ["k"], "bound": 4},
        {"op": "bass", "args": ["R"], "bound": 3},
        {"op": "check-type", "args": ["R", 2], "bound": 4},
        {"op": "semidualizing", "args": ["omega"], "bound": 2},
        {"op": "dualizing", "args": ["omega"], "bound": 2},
        {"op": "dualizing", "args": ["R"], "bound": 3},
        {"op": "verify-type-formula", "args": ["k", "omega"], "bound": 2},
        {"op": "verify-convolution", "args": ["k", "omega"], "bound": 2},
        {"op": "verify-generator-count", "args": ["R", "R"], "bound": 2},
    ]
    return p


def _hypersurface_xy():
    p = _base("hypersurface-xy", ["x", "y"], [1, 1], ["x*y"])
    p["modules"]["M"] = {"cyclic": ["x"]}
    p["modules"]["F2"] = {"free": [0, -1]}
    p["maps"]["f"] = {"multiply": "x + y"}
    p["complexes"]["Cone"] = {"cone": "f"}
    p["tasks"] = [
        {"op": "betti", "args": ["k"], "bound": 5},
        {"op": "bass", "args": ["R"], "bound": 5},
        {"op": "check-depth", "args": ["R", 1], "bound": 4},
        {"op": "check-dim", "args": ["R", 1], "bound": 4},
        {"op": "gcdim", "args": ["M", "R"], "bound": 4},
        {"op": "dualizing", "args": ["R"], "bound": 4},
        {"op": "verify-auslander-reiten", "args": ["F2", "hom-MM"], "bound": 5},
        {"op": "betti", "args": ["Cone"], "bound": 4},
        {"op": "verify-finite-injective", "args": ["Cone"], "bound": 5},
    ]
    return p


def _semigroup_345():
    p = _base("semigroup-345", ["a", "b", "c"], [3, 4, 5],
              ["b^2 - a*c", "b*c - a^3", "c^2 - a^2*b"])
    p["modules"]["omega"] = {"canonical": True}
    p["tasks"] = [
        {"op": "bass", "args": ["R"], "bound": 3},
        {"op": "betti", "args": ["omega"], "bound": 2},
        {"op": "check-type", "args": ["R", 2], "bound": 3},
        {"op": "check-depth", "args": ["R", 1], "bound": 3},
        {"op": "check-dim", "args": ["R", 1], "bound": 3},
        {"op": "semidualizing", "args": ["omega"], "bound": 2},
        {"op": "dualizing", "args": ["omega"], "bound": 2},
        {"op": "verify-type-formula", "args": ["R", "omega"], "bound": 2},
        {"op": "verify-type-formula", "args": ["omega", "omega"], "bound": 2},
        {"op": "verify-generator-count", "args": ["R", "omega"], "bound": 2},
        {"op": "hilbert", "args": ["R"], "bound": 10},
    ]
    return p


def _det_curve():
    # 2x2 minors of a 3x2 matrix of linear forms: codimension-two
    # Cohen-Macaulay by Hilbert-Burch
    p = _base("det-curve", ["x", "y", "z"], [1, 1, 1],
              ["x*z - y^2", "x^2 - y*z", "x*y - z^2"])
    p["modules"]["M"] = {"cyclic": ["x"]}
    p["tasks"] = [
        {"op": "betti", "args": ["k"], "bound": 3},
        {"op": "bass", "args": ["R"], "bound": 3},
        {"op": "check-depth", "args": ["R", 1], "bound": 3},
        {"op": "check-dim", "args": ["R", 1], "bound": 3},
        {"op": "check-type", "args": ["R", 2], "bound": 3},
        {"op": "hilbert", "args": ["R"], "bound": 8},
    ]
    return p


def _non_cm_line():
    p = _base("non-cm-line", ["x", "y"], [1, 1], ["x^2", "x*y"])
    p["tasks"] = [
        {"op": "betti", "args": ["k"], "bound": 4},
        {"op": "bass", "args": ["R"], "bound": 4},
        {"op": "check-depth", "args": ["R", 0], "bound": 4},
        {"op": "check-dim", "args": ["R", 1], "bound": 4},
        {"op": "hilbert", "args": ["R"], "bound": 8},
    ]
    return p


def _rational_node():
    p = _base("rational-node", ["x", "y"], [1, 1], ["x*y"], prime=None)
    p["modules"]["M"] = {"cyclic": ["x"]}
    p["tasks"] = [
        {"op": "betti", "args": ["k"], "bound": 4},
        {"op": "bass", "args": ["R"], "bound": 4},
        {"op": "check-depth", "args": ["R", 1], "bound": 3},
        {"op": "gcdim", "args": ["M", "R"], "bound": 3},
        {"op": "hilbert", "args": ["R"], "bound": 8},
    ]
    return p
