import pytest
from typing import List, Tuple
import os
import sys

# Add parent directory to path to import app modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.core.cayley.cayley_graph import cayley_graph
from app.core.cayley.connection_set import ConnectionSet, parse_connection_set
from app.core.graphs.colored_graph import ColoredGraph
from app.core.graphs.named_graphs import cycle, oracle_corpus, path
from app.core.groups.finite_group import FiniteGroup
from app.core.groups.group_spec import parse_group_spec
from app.services.verification_service import VerificationService

@pytest.fixture
def z5() -> FiniteGroup:
    """
    Fixture that provides the cyclic group of order 5.
    """
    return parse_group_spec("Z5")

@pytest.fixture
def z7() -> FiniteGroup:
    """
    Fixture that provides the cyclic group of order 7.
    """
    return parse_group_spec("Z7")

@pytest.fixture
def z9() -> FiniteGroup:
    """
    Fixture that provides the cyclic group of order 9.
    """
    return parse_group_spec("Z9")

@pytest.fixture
def z3xz3() -> FiniteGroup:
    """
    Fixture that provides the elementary abelian group of order 9.
    """
    return parse_group_spec("Z3xZ3")

@pytest.fixture
def sd21() -> FiniteGroup:
    """
    Fixture that provides the nonabelian group of order 21.
    """
    return parse_group_spec("SD(7,3,2)")

@pytest.fixture
def z9_colored_set(z9: FiniteGroup) -> ConnectionSet:
    """
    Fixture that provides {1, 8} in colour 0 and {2, 7} in colour 1 over Z9.
    """
    return parse_connection_set(z9, "1,-1@0,2,-2@1")

@pytest.fixture
def c5_cayley(z5: FiniteGroup) -> ColoredGraph:
    """
    Fixture that provides Cay(Z5; {1, -1}), the 5-cycle.
    """
    return cayley_graph(z5, parse_connection_set(z5, "1,-1"))

@pytest.fixture
def c5() -> ColoredGraph:
    """
    Fixture that provides the 5-cycle.
    """
    return cycle(5)

@pytest.fixture
def p4() -> ColoredGraph:
    """
    Fixture that provides the path on 4 vertices.
    """
    return path(4)

@pytest.fixture
def alternating_c4() -> ColoredGraph:
    """
    Fixture that provides a 4-cycle whose edges alternate between two colours.
    """
    return ColoredGraph(4, [(0, 1, 0), (1, 2, 1), (2, 3, 0), (3, 0, 1)])

@pytest.fixture
def corpus() -> List[Tuple[str, ColoredGraph]]:
    """
    Fixture that provides the thirty-graph corpus with at most 8 vertices.
    """
    return oracle_corpus()

@pytest.fixture
def verification_service() -> VerificationService:
    """
    Fixture that provides a VerificationService instance.
    """
    return VerificationService()
