import pytest

from src.executor import execute_task, execute_tasks


@pytest.mark.asyncio
async def test_execute_task_passes_arguments():
    assert await execute_task(pow, 2, 10) == 1024
    assert await execute_task(sorted, [3, 1, 2], reverse=True) == [3, 2, 1]


@pytest.mark.asyncio
async def test_execute_tasks_collects_results_by_name():
    results = await execute_tasks({"a": lambda: 1, "b": lambda: "two"})
    assert results == {"a": 1, "b": "two"}


@pytest.mark.asyncio
async def test_execute_tasks_reraises_the_first_failure():
    def fail():
        raise ValueError("boom")

    with pytest.raises(ValueError, match="boom"):
        await execute_tasks({"ok": lambda: 1, "bad": fail})
