import os
import sys

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("KPOINCARE_HYPOTHESIS_EXAMPLES", "40")),
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None:
        return
    ran = {int(r.nodeid.split("criterion_")[1].split("_")[0]) for key in ("passed", "failed") for r in terminalreporter.stats.get(key, []) if "criterion_" in r.nodeid and r.when == "call"}
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ran):
        terminalreporter.write_line(mod.LINES.get(k, f"criterion {k}: FAIL  (raised before recording)"))
