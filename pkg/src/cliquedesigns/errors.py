"""Exception hierarchy shared by all modules."""


class DesignError(ValueError):
    """Base class for all library-specific errors."""


class OrderMismatch(DesignError):
    """Two permutations of different orders were combined."""


class NotAPermutationMatrix(DesignError):
    """A 0/1 matrix does not have exactly one 1 per row and column."""


class InvalidOrder(DesignError):
    """The requested order is not admissible (e.g. not a perfect square)."""


class OrderTooLarge(DesignError):
    """Enumeration would exceed the configured memory budget."""


class MemoryBudgetExceeded(DesignError):
    """Dense adjacency would exceed the vertex budget."""


class InvalidK(DesignError):
    """Requested subgraph size is outside [1, V]."""


class EmptyCliqueSet(DesignError):
    """Uniform selection from a clique set with count 0."""


class WrongCliqueSize(DesignError):
    """A clique of the wrong size was passed to the assembler."""


class NotDisjointFromIdentity(DesignError):
    """A clique member fixes a point, so it cannot extend the identity."""


class NotSudokuDerangement(DesignError):
    """A clique member is not an S-permutation disjoint from the base."""


class PopulationTooLarge(DesignError):
    """Uniformity testing requires a fully enumerable design population."""
