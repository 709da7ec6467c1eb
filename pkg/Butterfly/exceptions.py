# Butterfly/exceptions.py

class WorkbenchError(Exception):
    pass

class GroundSizeError(WorkbenchError, ValueError):
    pass

class PermutationError(WorkbenchError, ValueError):
    pass

class CanonicalFormTooLarge(WorkbenchError):
    pass

class PreconditionFailed(WorkbenchError):
    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}: {detail}" if detail else reason)

class NotAnInterval(PreconditionFailed):
    def __init__(self, subset, cp):
        self.subset = subset
        self.cp = cp
        super().__init__("not_interval", f"{subset} is not an interval along ({cp})")

class FamilyParseError(WorkbenchError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")

class FixtureNotFound(WorkbenchError):
    pass

class NoSuperset(WorkbenchError):
    def __init__(self, subset):
        self.subset = subset
        super().__init__(f"no member strictly contains {subset}")

class MultipleSupersets(WorkbenchError):
    def __init__(self, subset, first, second):
        self.subset = subset
        self.first = first
        self.second = second
        super().__init__(f"{subset} is strictly contained in both {first} and {second}")

class BudgetExhausted(WorkbenchError):
    def __init__(self, result):
        self.result = result
        super().__init__(f"search budget exhausted after {result.nodes_explored} nodes (best so far {result.optimum})")

class InconsistentOptimum(WorkbenchError):
    pass
