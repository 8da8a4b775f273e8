"""Word-problem verdicts: equality, natural partial order, idempotency.

Verdicts are three-valued.  A partial approximation accepts only words that
are equal to or above its start word, so acceptance by an approximation is
already conclusive; a rejection is conclusive only when the automaton is
closed.  Budgets can therefore produce Unknown but never a wrong Yes/No.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .engine import Budget, ClosureResult, Status, schutzenberger_automaton
from .presentation import Presentation, Word


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass
class Verdict:
    answer: Answer
    witness: dict

    def to_json(self) -> dict:
        return {"answer": self.answer.value, "witness": self.witness}


def _closure_stats(result: ClosureResult) -> dict:
    return {
        "status": result.status.value,
        "rounds": result.rounds,
        "fold_events": result.fold_events,
        "vertices": len(result.graph.vertices),
    }


def _budget_info(budget: Budget) -> dict:
    return {"max_rounds": budget.max_rounds, "max_vertices": budget.max_vertices}


def decide_equal(u: Word, v: Word, p: Presentation, budget: Budget = Budget()) -> Verdict:
    """Does u = v hold in the inverse monoid presented by p?

    Yes iff each word is accepted by the other's automaton; acceptance by a
    partial approximation already proves membership, while No needs the
    rejecting automaton to be closed.
    """
    p.check_word(u)
    p.check_word(v)
    left = schutzenberger_automaton(u, p, budget)
    right = schutzenberger_automaton(v, p, budget)
    u_in_v = right.graph.accepts(u)
    v_in_u = left.graph.accepts(v)
    if u_in_v and v_in_u:
        answer = Answer.YES
    elif (right.status is Status.CLOSED and not u_in_v) or (
        left.status is Status.CLOSED and not v_in_u
    ):
        answer = Answer.NO
    else:
        answer = Answer.UNKNOWN
    witness = {
        "u": str(u),
        "v": str(v),
        "u_in_v": u_in_v,
        "v_in_u": v_in_u,
        "u_closure": _closure_stats(left),
        "v_closure": _closure_stats(right),
        "budget": _budget_info(budget),
    }
    return Verdict(answer, witness)


def decide_natural_leq(u: Word, w: Word, p: Presentation, budget: Budget = Budget()) -> Verdict:
    """Does w >= u hold in the natural partial order?

    Equivalent to w being accepted by the automaton of u.  Acceptance by a
    partial approximation proves Yes; No needs the automaton closed.
    """
    p.check_word(u)
    p.check_word(w)
    result = schutzenberger_automaton(u, p, budget)
    accepted = result.graph.accepts(w)
    if accepted:
        answer = Answer.YES
    elif result.status is Status.CLOSED:
        answer = Answer.NO
    else:
        answer = Answer.UNKNOWN
    witness = {
        "lower": str(u),
        "candidate": str(w),
        "accepted": accepted,
        "closure": _closure_stats(result),
        "budget": _budget_info(budget),
    }
    return Verdict(answer, witness)


def is_idempotent(w: Word, p: Presentation, budget: Budget = Budget()) -> Verdict:
    """Is w an idempotent?  A word is idempotent iff it equals w w^-1."""
    p.check_word(w)
    inner = decide_equal(w, w + w.inverse(), p, budget)
    return Verdict(inner.answer, {"word": str(w), "equality": inner.witness})
