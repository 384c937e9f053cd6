"""
Subtree-parallel sweeps over the augmentation tree
"""

import logging
import multiprocessing as mp
from typing import Any, Callable, Iterator, List, Sequence, Tuple

from tqdm import tqdm

from graphs.core import Graph, is_connected
from graphs.enumerate import expand, subtree_roots
from graphs.graph6 import from_graph6, to_graph6

logger = logging.getLogger(__name__)


def map_subtrees(worker: Callable[[Tuple], Any], n: int, extra: Sequence[Any] = (),
                 jobs: int = 1, split_depth: int = 5, progress: bool = False) -> List[Any]:
    """Run worker((root_graph6, n, *extra)) on every subtree root.

    Results come back in root order whatever the schedule, so merged
    output is deterministic. worker must be a module-level function.
    """
    roots = subtree_roots(n, split_depth)
    tasks = [(to_graph6(root), n, *extra) for root in roots]
    logger.debug(f"Sweeping n={n} over {len(tasks)} subtrees with {jobs} job(s)")

    if jobs <= 1 or len(tasks) == 1:
        return [worker(task) for task in tqdm(tasks, disable=not progress, desc=f"n={n}")]

    with mp.Pool(processes=jobs) as pool:
        return list(tqdm(pool.imap(worker, tasks), total=len(tasks), disable=not progress, desc=f"n={n}"))


def _graphs_worker(task: Tuple) -> List[str]:
    root_g6, n, connected_only = task
    return [to_graph6(G) for G in expand(from_graph6(root_g6), n)
            if not connected_only or is_connected(G)]


def all_graphs_parallel(n: int, connected_only: bool = False, jobs: int = 1,
                        split_depth: int = 5, progress: bool = False) -> Iterator[Graph]:
    """all_graphs(n) with subtrees expanded in worker processes; same output order"""
    for chunk in map_subtrees(_graphs_worker, n, (connected_only,), jobs=jobs,
                              split_depth=split_depth, progress=progress):
        for g6 in chunk:
            yield from_graph6(g6)
