import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from diffuni.field import mk_field  # noqa: E402
from diffuni.poly import FqPoly  # noqa: E402

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def fields(draw, lo=1, hi=10):
    return mk_field(draw(st.integers(lo, hi)))


def elems(ctx, nonzero=False):
    return st.integers(1 if nonzero else 0, ctx.q - 1)


@st.composite
def polys(draw, ctx, min_deg=0, max_deg=12, exact=None):
    deg = exact if exact is not None else draw(st.integers(min_deg, max_deg))
    low = draw(st.lists(elems(ctx), min_size=deg, max_size=deg))
    return FqPoly(ctx, low + [draw(elems(ctx, nonzero=True))])


@st.composite
def field_and_poly(draw, lo=1, hi=8, min_deg=0, max_deg=12):
    ctx = draw(fields(lo, hi))
    return ctx, draw(polys(ctx, min_deg, max_deg))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criteria")


def pytest_terminal_summary(terminalreporter):
    # one line per acceptance criterion, from the actual outcomes
    import re

    outcome = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_", getattr(rep, "nodeid", ""))
            if m and getattr(rep, "when", "call") in ("call", "setup"):
                k = int(m.group(1))
                ok = status == "passed"
                outcome[k] = outcome.get(k, True) and ok
    if outcome:
        terminalreporter.section("acceptance criteria")
        for k in sorted(outcome):
            terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if outcome[k] else 'FAIL'}")
