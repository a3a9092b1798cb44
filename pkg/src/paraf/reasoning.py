"""Credulous and skeptical acceptance for all seven semantics."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .af import Framework
from .errors import InputError
from .semantics import ExtensionSet, Semantics, extensions
from .stabilizer import paracoherent_extensions


class Task(Enum):
    EE = "EE"  # enumerate all extensions
    SE = "SE"  # some extension
    DC = "DC"  # credulous acceptance
    DS = "DS"  # skeptical acceptance


@dataclass(frozen=True)
class Query:
    semantics: Semantics
    task: Task
    argument: str | None = None


def solve(framework: Framework, sem: Semantics, max_args: int | None = None) -> ExtensionSet:
    """Extensions under any of the seven semantics."""
    if sem is Semantics.PARA:
        return paracoherent_extensions(framework, max_args)
    return extensions(framework, sem, max_args)


def _check_arg(framework: Framework, arg: str) -> None:
    if arg not in framework.index:
        raise InputError(f"unknown argument {arg!r}")


def credulous(framework: Framework, sem: Semantics, arg: str, max_args: int | None = None) -> bool:
    _check_arg(framework, arg)
    return any(arg in ext for ext in solve(framework, sem, max_args))


def skeptical(framework: Framework, sem: Semantics, arg: str, max_args: int | None = None) -> bool:
    """Vacuously true when there are no extensions."""
    _check_arg(framework, arg)
    return all(arg in ext for ext in solve(framework, sem, max_args))


def answer(framework: Framework, query: Query, max_args: int | None = None):
    """ExtensionSet for EE, an ArgSet or None for SE, bool for DC/DS."""
    if query.task in (Task.DC, Task.DS):
        if query.argument is None:
            raise InputError(f"{query.task.value} needs an argument")
        decide = credulous if query.task is Task.DC else skeptical
        return decide(framework, query.semantics, query.argument, max_args)
    found = solve(framework, query.semantics, max_args)
    if query.task is Task.EE:
        return found
    return found[0] if found else None
