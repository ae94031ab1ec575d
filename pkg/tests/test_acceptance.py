"""Runs every acceptance criterion at its stated tolerance and time budget.

Each criterion prints one PASS/FAIL line; the lines are also collected into
an "acceptance criteria" section of the pytest terminal summary.
"""

import pytest

from treeparity.verify import CRITERIA

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.name for c in CRITERIA])
def test_criterion(criterion):
    outcome = criterion.run()
    print(outcome.line())
    ACCEPTANCE_LINES.append(outcome.line())
    assert outcome.passed, outcome.detail
    assert outcome.within_budget, f"took {outcome.seconds:.3f}s, budget {outcome.budget}s"
