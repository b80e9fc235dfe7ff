import json
from pathlib import Path
from typing import Any

import yaml

# Directory holding the data files shipped with the package
RESOURCES = Path(__file__).resolve().parent.parent / 'resources'

# Primes p used for the torsion counts Tors_(p,k) when none are requested
DEFAULT_PRIMES: tuple[int, ...] = (2, 3)

# Ideal indices k used when none are requested. Entries are integers or
# expressions relative to the number of planes, like 'n-2'
DEFAULT_IDEALS: tuple[str, ...] = ('1',)

# Number of worker threads used to evaluate torsion grids
THREADS = 1

# Number of torsion points evaluated by each worker task
CHUNK_SIZE = 512

# Whether to print progress lines on stderr during long computations
SHOW_PROGRESS = True

# Torsion grids with more points than this threshold report their progress
PROGRESS_THRESHOLD = 2000

# Largest matrix size for which linking matrices are compared by brute force
LINKING_SEARCH_LIMIT = 8


def get_content(file: str, *, YAML: bool = True) -> Any:
    """Return the content of the given YAML [file]. The function will search the
    file under the local 'resources' directory. Optionally, specifying [YAML]
    to false enables the function to parse JSON files"""
    with open(RESOURCES / file, 'r') as content:
        return yaml.safe_load(content) if YAML else \
            json.load(content)


# List of named arrangements, with the same structure as the
# resources/catalog.yaml file so check this file out for more information
CATALOG: list[dict[str, Any]] = get_content('catalog.yaml')

# Rows of the invariants table of the arrangements of at most six planes,
# see resources/table1.yaml
TABLE1: list[dict[str, Any]] = get_content('table1.yaml')

# JSON schema every report produced with --json validates against
REPORT_SCHEMA: dict[str, Any] = get_content('report.schema.json', YAML=False)
