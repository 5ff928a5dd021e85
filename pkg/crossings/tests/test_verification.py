from crossings.services import verification


def test_all_checks_pass():
    results = verification.run_checks()
    failed = [r for r in results if not r.passed]
    assert not failed, failed
    names = {r.name for r in results}
    assert "class probability C9" in names
    assert "star_with_tail pmf n=8" in names


def test_disputed_closed_forms_are_detected():
    results = {r.name: r for r in verification.check_closed_forms()}
    assert results["closed forms path(5)"].passed
    assert results["closed forms cycle(6)"].detail == "consistent"
