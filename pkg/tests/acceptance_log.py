# Shared between conftest (summary hook) and test_acceptance (writer).
LINES: list[str] = []
