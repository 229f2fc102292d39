"""Identity checking: exhaustive, lifted, and sampled modes, plus closed forms.

Each identity is a fixed pair of expression trees over variables ``x``, ``y``,
``z`` and the binary product ``*``. The same trees drive three evaluators:

* an exhaustive scan over all assignments (vectorised over the index Cayley
  table when the order permits, plain loops otherwise),
* a lifted check that proves the identity on the scalar shadow when the shape
  multiplies entrywise (the verdict then transfers entry-for-entry),
* a seeded random sampler for spaces too large to enumerate.

Assignments are scanned with the FIRST variable varying fastest (x innermost,
then y, then z); a failure witness is minimal under that order, so exhaustive
reruns always reproduce the same witness regardless of internal chunking.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from .carrier import (
    Carrier,
    CarrierError,
    IntervalOf,
    MixedNeutrosophic,
    Modular,
    PureNeutrosophic,
)
from .groupoid import BudgetExceeded, Groupoid, build
from .shape import Element, Scalar, TooLarge, scalar_projection

DEFAULT_BUDGET = 10**8
DEFAULT_TRIALS = 10**4
BUDGET_ENV_VAR = "GGL_BUDGET"
_NUMPY_ORDER_LIMIT = 512

Node = Any  # str variable or ("*", Node, Node)


class IdentityId(Enum):
    IDEMPOTENT = "idempotent"
    COMMUTATIVE = "commutative"
    ASSOCIATIVE = "associative"
    LEFT_ALTERNATIVE = "left-alternative"
    RIGHT_ALTERNATIVE = "right-alternative"
    P_IDENTITY = "p-identity"
    MOUFANG = "moufang"
    BOL = "bol"


M = lambda a, b: ("*", a, b)  # noqa: E731 - tree shorthand

TEMPLATES: dict[IdentityId, tuple[Node, Node, tuple[str, ...]]] = {
    IdentityId.IDEMPOTENT: (M("x", "x"), "x", ("x",)),
    IdentityId.COMMUTATIVE: (M("x", "y"), M("y", "x"), ("x", "y")),
    IdentityId.ASSOCIATIVE: (M(M("x", "y"), "z"), M("x", M("y", "z")), ("x", "y", "z")),
    IdentityId.LEFT_ALTERNATIVE: (M(M("x", "x"), "y"), M("x", M("x", "y")), ("x", "y")),
    IdentityId.RIGHT_ALTERNATIVE: (M(M("x", "y"), "y"), M("x", M("y", "y")), ("x", "y")),
    IdentityId.P_IDENTITY: (M(M("x", "y"), "x"), M("x", M("y", "x")), ("x", "y")),
    IdentityId.MOUFANG: (
        M(M("x", "y"), M("z", "x")),
        M(M("x", M("y", "z")), "x"),
        ("x", "y", "z"),
    ),
    IdentityId.BOL: (
        M(M(M("x", "y"), "z"), "y"),
        M("x", M(M("y", "z"), "y")),
        ("x", "y", "z"),
    ),
}


class CheckMode(Enum):
    AUTO = "auto"
    EXHAUSTIVE = "exhaustive"
    LIFTED = "lifted"
    SAMPLED = "sampled"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise BudgetExceeded(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}")


@dataclass(frozen=True)
class IdentityVerdict:
    identity: str
    method: str  # exhaustive | lifted | sampled
    status: str  # holds | fails | sampled_no_counterexample
    witness: tuple[Element, ...] | None = None
    witness_labels: tuple[str, ...] | None = None
    trials: int | None = None
    seed: int | None = None

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    @property
    def fails(self) -> bool:
        return self.status == "fails"

    def to_json(self) -> dict:
        out: dict = {
            "identity": self.identity,
            "method": self.method,
            "status": self.status,
        }
        if self.witness_labels is not None:
            out["witness"] = list(self.witness_labels)
        if self.trials is not None:
            out["trials"] = self.trials
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def eval_tree(node: Node, env: dict, prod) -> Any:
    """Evaluate a template tree; prod multiplies two evaluated operands."""
    if isinstance(node, str):
        return env[node]
    _, a, b = node
    return prod(eval_tree(a, env, prod), eval_tree(b, env, prod))


# -- exhaustive ---------------------------------------------------------------


def _witness_verdict(g: Groupoid, identity: IdentityId, method: str, assign: tuple[int, ...]) -> IdentityVerdict:
    if g.spec is not None:
        els = g.elements()
        witness = tuple(els[i] for i in assign)
        labels = tuple(g.labels()[i] for i in assign)
    else:
        witness = tuple(assign)
        labels = tuple(g.labels()[i] for i in assign)
    return IdentityVerdict(
        identity=identity.value, method=method, status="fails",
        witness=witness, witness_labels=labels,
    )


def _exhaustive_numpy(g: Groupoid, identity: IdentityId) -> IdentityVerdict:
    lhs_t, rhs_t, vars_ = TEMPLATES[identity]
    T = np.asarray(g.index_table(), dtype=np.int64)
    n = T.shape[0]
    prod = lambda A, B: T[A, B]  # noqa: E731

    if len(vars_) == 1:
        X = np.arange(n)
        mism = eval_tree(lhs_t, {"x": X}, prod) != eval_tree(rhs_t, {"x": X}, prod)
        if mism.any():
            return _witness_verdict(g, identity, "exhaustive", (int(np.argmax(mism)),))
    elif len(vars_) == 2:
        X = np.arange(n)[None, :]
        Y = np.arange(n)[:, None]
        env = {"x": X, "y": Y}
        mism = eval_tree(lhs_t, env, prod) != eval_tree(rhs_t, env, prod)
        if mism.any():
            yy, xx = np.argwhere(mism)[0]  # row-major: y outermost, x fastest
            return _witness_verdict(g, identity, "exhaustive", (int(xx), int(yy)))
    else:
        X = np.arange(n)[None, :]
        Y = np.arange(n)[:, None]
        for z in range(n):
            env = {"x": X, "y": Y, "z": z}
            mism = eval_tree(lhs_t, env, prod) != eval_tree(rhs_t, env, prod)
            if mism.any():
                yy, xx = np.argwhere(mism)[0]
                return _witness_verdict(g, identity, "exhaustive", (int(xx), int(yy), z))
    return IdentityVerdict(identity=identity.value, method="exhaustive", status="holds")


def _exhaustive_loops(g: Groupoid, identity: IdentityId) -> IdentityVerdict:
    lhs_t, rhs_t, vars_ = TEMPLATES[identity]
    els = g.elements()
    prod = g.star
    if len(vars_) == 1:
        for i, x in enumerate(els):
            if eval_tree(lhs_t, {"x": x}, prod) != eval_tree(rhs_t, {"x": x}, prod):
                return _witness_verdict(g, identity, "exhaustive", (i,))
    elif len(vars_) == 2:
        for j, y in enumerate(els):
            for i, x in enumerate(els):
                env = {"x": x, "y": y}
                if eval_tree(lhs_t, env, prod) != eval_tree(rhs_t, env, prod):
                    return _witness_verdict(g, identity, "exhaustive", (i, j))
    else:
        for k, z in enumerate(els):
            for j, y in enumerate(els):
                for i, x in enumerate(els):
                    env = {"x": x, "y": y, "z": z}
                    if eval_tree(lhs_t, env, prod) != eval_tree(rhs_t, env, prod):
                        return _witness_verdict(g, identity, "exhaustive", (i, j, k))
    return IdentityVerdict(identity=identity.value, method="exhaustive", status="holds")


def _exhaustive(g: Groupoid, identity: IdentityId, budget: int) -> IdentityVerdict:
    order = g.order
    nvars = len(TEMPLATES[identity][2])
    if isinstance(order, TooLarge):
        raise BudgetExceeded("element space exceeds the enumeration cap")
    if order**nvars > budget:
        raise BudgetExceeded(
            f"exhaustive check needs {order}^{nvars} evaluations, budget is {budget}"
        )
    if order <= _NUMPY_ORDER_LIMIT:
        return _exhaustive_numpy(g, identity)
    return _exhaustive_loops(g, identity)


# -- lifted -------------------------------------------------------------------


def _scalar_shadow(g: Groupoid) -> Groupoid:
    sp = g.spec
    return build(
        sp.carrier, Scalar(), sp.t, sp.u,
        t_indeterminate=sp.t_indeterminate, u_indeterminate=sp.u_indeterminate,
    )


def _lifted(g: Groupoid, identity: IdentityId, budget: int) -> IdentityVerdict:
    if g.spec is None:
        raise CarrierError("lifted mode needs a spec-backed groupoid")
    lift = scalar_projection(g.spec.shape)
    if not lift.liftable:
        raise CarrierError(f"shape is not liftable: {lift.reason}")
    shadow = _scalar_shadow(g)
    inner = _exhaustive(shadow, identity, budget)
    if inner.status == "holds":
        return IdentityVerdict(identity=identity.value, method="lifted", status="holds")
    k = g.spec.shape.entry_count()
    witness = tuple(tuple(e[0] for _ in range(k)) for e in inner.witness)
    from .shape import format_element

    labels = tuple(format_element(g.spec.carrier, g.spec.shape, w) for w in witness)
    return IdentityVerdict(
        identity=identity.value, method="lifted", status="fails",
        witness=witness, witness_labels=labels,
    )


# -- sampled ------------------------------------------------------------------


def _sampled(g: Groupoid, identity: IdentityId, trials: int, seed: int) -> IdentityVerdict:
    lhs_t, rhs_t, vars_ = TEMPLATES[identity]
    rng = random.Random(seed)
    if g.spec is not None:
        carrier = g.spec.carrier
        size = carrier.size()
        if size is None:
            raise CarrierError("cannot sample a non-enumerable carrier")
        values = carrier.enumerate_values()
        k = g.spec.shape.entry_count()

        def draw() -> Element:
            return tuple(values[rng.randrange(size)] for _ in range(k))

        prod = g.star
        fmt = lambda e: _label(g, e)  # noqa: E731
    else:
        n = len(g.labels())

        def draw() -> int:
            return rng.randrange(n)

        prod = g.star_idx
        fmt = lambda i: g.labels()[i]  # noqa: E731

    for _ in range(trials):
        env = {v: draw() for v in vars_}
        if eval_tree(lhs_t, env, prod) != eval_tree(rhs_t, env, prod):
            witness = tuple(env[v] for v in vars_)
            return IdentityVerdict(
                identity=identity.value, method="sampled", status="fails",
                witness=witness, witness_labels=tuple(fmt(w) for w in witness),
                trials=trials, seed=seed,
            )
    return IdentityVerdict(
        identity=identity.value, method="sampled", status="sampled_no_counterexample",
        trials=trials, seed=seed,
    )


def _label(g: Groupoid, e: Element) -> str:
    from .shape import format_element

    return format_element(g.spec.carrier, g.spec.shape, e)


# -- entry point --------------------------------------------------------------


def check_identity(
    g: Groupoid,
    identity: IdentityId,
    mode: CheckMode = CheckMode.AUTO,
    *,
    budget: int | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> IdentityVerdict:
    budget = default_budget() if budget is None else budget
    nvars = len(TEMPLATES[identity][2])

    if mode is CheckMode.EXHAUSTIVE:
        return _exhaustive(g, identity, budget)
    if mode is CheckMode.LIFTED:
        return _lifted(g, identity, budget)
    if mode is CheckMode.SAMPLED:
        return _sampled(g, identity, trials, seed)

    # AUTO: prefer a lifted proof, then exhaustive, then sampling
    if g.spec is not None and g.spec.shape.entry_count() > 1:
        if scalar_projection(g.spec.shape).liftable:
            scalar_size = g.spec.carrier.size()
            if scalar_size is not None and scalar_size**nvars <= budget:
                return _lifted(g, identity, budget)
    order = g.order
    if not isinstance(order, TooLarge) and order**nvars <= budget:
        return _exhaustive(g, identity, budget)
    return _sampled(g, identity, trials, seed)


def check_alternative(
    g: Groupoid,
    mode: CheckMode = CheckMode.AUTO,
    *,
    budget: int | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> tuple[IdentityVerdict, IdentityVerdict, IdentityVerdict]:
    """Both alternative laws; the combined verdict holds iff both hold."""
    left = check_identity(g, IdentityId.LEFT_ALTERNATIVE, mode, budget=budget, trials=trials, seed=seed)
    right = check_identity(g, IdentityId.RIGHT_ALTERNATIVE, mode, budget=budget, trials=trials, seed=seed)
    if left.fails or right.fails:
        bad = left if left.fails else right
        combined = IdentityVerdict(
            identity="alternative", method=bad.method, status="fails",
            witness=bad.witness, witness_labels=bad.witness_labels,
            trials=bad.trials, seed=bad.seed,
        )
    elif left.status == "holds" and right.status == "holds":
        combined = IdentityVerdict(identity="alternative", method=left.method, status="holds")
    else:
        weaker = left if left.status != "holds" else right
        combined = IdentityVerdict(
            identity="alternative", method=weaker.method,
            status="sampled_no_counterexample", trials=weaker.trials, seed=weaker.seed,
        )
    return combined, left, right


# -- closed forms -------------------------------------------------------------

CLOSED_FORM_NAMES = (
    "idempotent-iff",
    "semigroup-iff",
    "alternative-iff",
    "type3-p-alt-iff",
    "equal-pair-p",
)


def closed_form(name: str, n: int, t: int, u: int) -> bool:
    """Arithmetic predicates on (n, t, u) matching specific check outcomes."""
    t %= n
    u %= n
    if name == "idempotent-iff":
        return (t + u) % n == 1
    if name == "semigroup-iff":
        return (t * t) % n == t and (u * u) % n == u
    if name == "alternative-iff":
        # intended domain: equal pairs over a composite modulus
        return t == u and (t * t) % n == t
    if name == "type3-p-alt-iff":
        if (t == 0) == (u == 0):
            return False
        s = t or u
        return (s * s) % n == s
    if name == "equal-pair-p":
        return t == u
    raise CarrierError(f"unknown closed form: {name!r}")


def integer_params(g: Groupoid) -> tuple[int, int, int] | None:
    """(n, t, u) for closed-form evaluation, when the parameters act exactly
    like residues: plain/pure carriers always; mixed carriers only when both
    parameters have no I component."""
    if g.spec is None:
        return None
    carrier = g.spec.carrier
    base = carrier.inner if isinstance(carrier, IntervalOf) else carrier
    if isinstance(base, (Modular, PureNeutrosophic)):
        return base.n, int(g.spec.t), int(g.spec.u)
    if isinstance(base, MixedNeutrosophic):
        (a, b), (c, d) = base.reduce(g.spec.t), base.reduce(g.spec.u)
        if b == 0 and d == 0:
            return base.n, a, c
    return None


def applicable_closed_forms(g: Groupoid, identity: IdentityId) -> dict[str, bool]:
    """Closed forms relevant to this identity/groupoid, with their predictions."""
    ints = integer_params(g)
    if ints is None:
        return {}
    n, t, u = ints
    out: dict[str, bool] = {}
    if identity is IdentityId.IDEMPOTENT:
        out["idempotent-iff"] = closed_form("idempotent-iff", n, t, u)
    elif identity is IdentityId.ASSOCIATIVE:
        out["semigroup-iff"] = closed_form("semigroup-iff", n, t, u)
    elif identity in (IdentityId.LEFT_ALTERNATIVE, IdentityId.RIGHT_ALTERNATIVE):
        if t % n == u % n and not _is_prime_or_unit_modulus(n):
            out["alternative-iff"] = closed_form("alternative-iff", n, t, u)
        if (t % n == 0) != (u % n == 0):
            out["type3-p-alt-iff"] = closed_form("type3-p-alt-iff", n, t, u)
    elif identity is IdentityId.P_IDENTITY:
        if t % n == u % n:
            out["equal-pair-p"] = closed_form("equal-pair-p", n, t, u)
        if (t % n == 0) != (u % n == 0):
            out["type3-p-alt-iff"] = closed_form("type3-p-alt-iff", n, t, u)
    return out


def _is_prime_or_unit_modulus(n: int) -> bool:
    from .carrier import is_prime

    return n < 4 or is_prime(n)


# -- cross validation ---------------------------------------------------------


@dataclass
class ConsistencyReport:
    identity: str
    verdicts: list[IdentityVerdict] = field(default_factory=list)
    closed_forms: dict[str, dict] = field(default_factory=dict)
    agreement: bool = True
    disagreements: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "verdicts": [v.to_json() for v in self.verdicts],
            "closed_forms": self.closed_forms,
            "agreement": self.agreement,
            "disagreements": list(self.disagreements),
        }


def cross_validate(
    g: Groupoid,
    identity: IdentityId,
    *,
    budget: int | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> ConsistencyReport:
    """Run every applicable route and compare answers; disagreement is data."""
    budget = default_budget() if budget is None else budget
    nvars = len(TEMPLATES[identity][2])
    report = ConsistencyReport(identity=identity.value)

    order = g.order
    if not isinstance(order, TooLarge) and order**nvars <= budget:
        report.verdicts.append(_exhaustive(g, identity, budget))
    if g.spec is not None and scalar_projection(g.spec.shape).liftable and g.spec.shape.entry_count() > 1:
        scalar_size = g.spec.carrier.size()
        if scalar_size is not None and scalar_size**nvars <= budget:
            report.verdicts.append(_lifted(g, identity, budget))
    report.verdicts.append(_sampled(g, identity, trials, seed))

    hard = {v.status for v in report.verdicts if v.status in ("holds", "fails")}
    if len(hard) > 1:
        report.agreement = False
        report.disagreements.append(
            "methods disagree: " + ", ".join(f"{v.method}={v.status}" for v in report.verdicts)
        )
    sampled = [v for v in report.verdicts if v.method == "sampled"]
    if sampled and sampled[0].status == "sampled_no_counterexample" and "fails" in hard:
        report.disagreements.append(
            "sampling found no counterexample but an exact method failed; "
            "sampling alone would have been misleading"
        )

    decided = "fails" not in hard if hard else None
    for name, predicted in applicable_closed_forms(g, identity).items():
        agrees = None if decided is None else predicted == decided
        report.closed_forms[name] = {"predicted": predicted, "agrees": agrees}
        if agrees is False:
            report.agreement = False
            report.disagreements.append(
                f"closed form {name} predicts {predicted} but checks observed {decided}"
            )
    return report
