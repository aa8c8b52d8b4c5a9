"""Suite-wide audits and the acceptance report.

Every Groebner basis and every Sylvester sequence computed anywhere in the
session is checked as it is produced: S-polynomials and inputs must reduce to
zero, and consecutive sequence terms must satisfy the signed division
identity.  A failed audit raises inside the test that triggered it.

Tests marked ``criterion(n, "summary")`` are rolled up into one PASS/FAIL
line per criterion at the end of the run.
"""

import itertools
import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

AUDIT = {"bases": 0, "sequences": 0, "bases_failed": [], "sequences_failed": []}
CRITERIA = {}  # n -> summary
OUTCOMES = defaultdict(list)  # n -> [(nodeid, passed)]


def audit_basis(gb, gens):
    from realroots.groebner import normal_form, s_polynomial

    for f, g in itertools.combinations(gb.generators, 2):
        if not normal_form(s_polynomial(f, g, gb.order), gb).is_zero():
            return f"S({f}, {g}) does not reduce to 0"
    for g in gens:
        if not normal_form(g, gb).is_zero():
            return f"generator {g} does not reduce to 0"
    return None


def audit_sequence(seq):
    for i in range(1, len(seq) - 1):
        q, r = divmod(seq[i - 1], seq[i])
        if r != -seq[i + 1] or q * seq[i] - seq[i + 1] != seq[i - 1]:
            return f"division identity fails at index {i}"
    if len(seq) >= 2 and not (seq[-2] % seq[-1]).is_zero():
        return "last term does not divide its predecessor"
    return None


def _wrap(fn, checker, counter):
    def wrapped(*args, **kwargs):
        out = fn(*args, **kwargs)
        inputs = args[0] if args else kwargs.get("gens", kwargs.get("f"))
        problem = checker(out, inputs) if counter == "bases" else checker(out)
        AUDIT[counter] += 1
        if problem:
            AUDIT[counter + "_failed"].append(problem)
            raise AssertionError(f"audit: {problem}")
        return out

    wrapped.__wrapped__ = fn
    return wrapped


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, summary): acceptance criterion covered by the test")
    from realroots import cli, groebner, univariate

    if not hasattr(groebner.buchberger, "__wrapped__"):
        b = _wrap(groebner.buchberger, audit_basis, "bases")
        groebner.buchberger = b
        cli.buchberger = b
        univariate.sylvester_sequence = _wrap(univariate.sylvester_sequence, audit_sequence, "sequences")


def pytest_collection_modifyitems(items):
    for item in items:
        for m in item.iter_markers("criterion"):
            CRITERIA[m.args[0]] = m.args[1]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marks = list(item.iter_markers("criterion"))
    if not marks:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        for m in marks:
            OUTCOMES[m.args[0]].append((item.nodeid, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(CRITERIA):
        results = OUTCOMES.get(n, [])
        ok = bool(results) and all(p for _, p in results)
        if n == 7:
            ok = ok and AUDIT["sequences"] > 0 and not AUDIT["sequences_failed"]
        if n == 8:
            ok = ok and AUDIT["bases"] > 0 and not AUDIT["bases_failed"]
        extra = {7: f"  [{AUDIT['sequences']} sequences audited]", 8: f"  [{AUDIT['bases']} bases audited]"}.get(n, "")
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {n}: {CRITERIA[n]}{extra}")
