import concurrent.futures
import itertools
import os
import typing

import tqdm


def _map_in_batches(
    *,
    function: typing.Callable[..., list],
    items: typing.Sequence[int],
    batch_size: int,
    workers: int,
    description: str,
    display_progress: bool,
    **kwargs: typing.Any,
) -> list:
    """
    Apply `function(batch, **kwargs)` to consecutive batches of `items` and concatenate the returned lists.

    With more than one process, `function` must be a module-level callable with picklable arguments.
    Results come back in completion order; callers sort them.

    Parameters
    ----------
    workers : int
        A positive count is capped at the number of CPUs; -1 means every CPU, -2 all but one, and so on.
        Anything that resolves to a single process runs the batches in the current process.

    Raises
    ------
    ValueError
        If `workers` is 0.
    """
    if workers == 0:
        message = "The number of workers must be nonzero; use 1 to run in the current process."
        raise ValueError(message)

    cpu_count = os.cpu_count() or 1
    processes = min(workers, cpu_count) if workers > 0 else max(cpu_count + workers + 1, 1)
    batches = list(itertools.batched(items, n=batch_size))
    tqdm_style_kwargs = {
        "total": len(batches),
        "desc": description,
        "unit": "batches",
        "smoothing": 0,
        "disable": not display_progress,
    }

    results = []
    if processes == 1:
        for batch in tqdm.tqdm(iterable=batches, **tqdm_style_kwargs):
            results.extend(function(batch, **kwargs))
        return results

    with concurrent.futures.ProcessPoolExecutor(max_workers=processes) as executor:
        futures = [executor.submit(function, batch, **kwargs) for batch in batches]
        for future in tqdm.tqdm(iterable=concurrent.futures.as_completed(futures), **tqdm_style_kwargs):
            results.extend(future.result())
    return results
