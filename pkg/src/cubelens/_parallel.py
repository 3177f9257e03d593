from concurrent.futures import ProcessPoolExecutor


def pmap(fn, jobs, workers=1):
    """Map ``fn`` over ``jobs`` (tuples of args), in-process or on a pool.

    Results come back in job order so callers can merge deterministically.
    """
    jobs = list(jobs)
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *job) for job in jobs]
        return [f.result() for f in futures]
