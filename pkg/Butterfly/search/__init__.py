# Butterfly/search/__init__.py

from Butterfly.search.engine import SearchBudget, SearchResult, max_family, max_family_async
from Butterfly.search.catalog import (ExtremalCatalog, enumerate_max_families,
                                      verify_extremal_classes, verify_max_size)
from Butterfly.search.random_families import random_family, random_fork_free_family, random_star_family
