import random

import pytest

from roughkit.foundation import InformationTable, Partition, Universe, indiscernibility


@pytest.fixture
def triage_table():
    return InformationTable.from_rows(
        ("Fever", "Cough", "Diagnosis"),
        [
            ("p1", "High", "Yes", "Flu"),
            ("p2", "High", "Yes", "Cold"),
            ("p3", "High", "No", "Flu"),
            ("p4", "High", "No", "Flu"),
            ("p5", "Normal", "No", "Healthy"),
            ("p6", "Normal", "No", "Healthy"),
        ],
        decision="Diagnosis",
    )


@pytest.fixture
def triage_partition(triage_table):
    return indiscernibility(triage_table, ["Fever", "Cough"])


@pytest.fixture
def flu_target(triage_table):
    return triage_table.decision_concept("Flu")


def random_universe(rng: random.Random, max_size: int = 8, min_size: int = 1) -> Universe:
    n = rng.randint(min_size, max_size)
    return Universe(tuple(f"e{i}" for i in range(n)))


def random_partition(rng: random.Random, universe: Universe) -> Partition:
    labels = [rng.randint(0, max(1, universe.size // 2)) for _ in range(universe.size)]
    return Partition.from_labels(universe, labels)


def random_subset(rng: random.Random, universe: Universe):
    return universe.subset_of_indices(i for i in range(universe.size) if rng.random() < 0.5)
