import os

os.environ.setdefault("JACKSOV_IN_TEST", "1")


def pytest_collection_modifyitems(items):
    items.sort(key=lambda item: item.nodeid)
