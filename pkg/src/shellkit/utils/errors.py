# -*- Mode: python; tab-width: 4; indent-tabs-mode:nil; coding:utf-8 -*-
#
# Copyright (c) 2023 Authors and contributors
# (see the AUTHORS.rst file for the full list of names)
#
# Released under the BSD 3-Clause "New" or "Revised" License
# SPDX-License-Identifier: BSD-3-Clause
"""Exceptions raised by shellkit.

Errors about malformed input also derive from :py:class:`ValueError`, errors
about exhausted resources from :py:class:`RuntimeError`. A failing check is
never an exception: checkers return a :py:class:`shellkit.utils.CheckReport`.
"""


class ShellkitError(Exception):
    """Base class of every error raised by shellkit."""


# posets


class NotBoundedError(ShellkitError, ValueError):
    """The cover relations do not have exactly one minimal and one maximal element."""


class NotReducedError(ShellkitError, ValueError):
    """A listed cover pair is implied by a longer chain."""


class CycleError(ShellkitError, ValueError):
    """The cover relations contain a directed cycle."""


class NotComparableError(ShellkitError, ValueError):
    """Two elements expected to satisfy ``u <= v`` do not."""


class UnknownElementError(ShellkitError, KeyError):
    """An element identifier is not part of the poset."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class InvalidRootError(ShellkitError, ValueError):
    """A sequence is not a saturated chain starting at the bottom."""


class ChainNotInPosetError(ShellkitError, ValueError):
    """A sequence of elements is not a saturated chain of the poset."""


# labelings


class MissingChainError(ShellkitError, ValueError):
    """Per-chain label data misses a maximal chain."""


class ExtraChainError(ShellkitError, ValueError):
    """Per-chain label data names a sequence that is not a maximal chain."""


class IncompleteLabelingError(ShellkitError, ValueError):
    """A labeling has no label for some (root, cover) pair."""


class IncomparableLabelsError(ShellkitError, ValueError):
    """Label tokens cannot be placed in a total order."""


class InvalidLabelError(ShellkitError, ValueError):
    """A label is not part of its label set."""


# orderings


class InvalidOrderingError(ShellkitError, ValueError):
    """An atom order is not a permutation of the up-covers of its root."""


class BottomHasNoParentError(ShellkitError, ValueError):
    """F/G sets need a root with at least one cover relation."""


class PreconditionViolatedError(ShellkitError, ValueError):
    """Swapping two atoms is not allowed for this ordering.

    :param upper: the element ``w`` whose rooted interval has one of the two
        atoms as its earliest atom.
    """

    def __init__(self, message: str, upper: str = None):
        super().__init__(message)
        self.upper = upper


class _ReportError(ShellkitError, ValueError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotGRAOError(_ReportError):
    """The chain-atom ordering is not a generalized recursive atom ordering."""


class NotRAOError(_ReportError):
    """The chain-atom ordering is not a recursive atom ordering."""


class NotSelfConsistentTopologicalCLError(_ReportError):
    """The labeling is not a self-consistent topological CL-labeling."""


class CheckerPreconditionFailedError(_ReportError):
    """A labeling does not pass the check an operation relies on."""


# resources


class BudgetExceededError(ShellkitError, RuntimeError):
    """An enumeration would exceed its configured size budget."""


class TimeBudgetExceededError(ShellkitError, RuntimeError):
    """A search ran out of its time budget."""


# topology


class NotPermutationError(ShellkitError, ValueError):
    """A facet order is not a permutation of the facets."""


# uncrossing


class InvalidStrandWordError(ShellkitError, ValueError):
    """A sequence does not encode a perfect matching in canonical form."""


class NotCrossingError(ShellkitError, ValueError):
    """Two strands of a strand word do not cross."""


class PipelineStageError(ShellkitError):
    """A stage of the uncrossing pipeline failed.

    :param stage: name of the failing stage.
    :param report: the :py:class:`shellkit.utils.CheckReport` of that stage.
    :param pipeline: the :py:class:`shellkit.utils.PipelineReport` up to and
        including the failing stage.
    """

    def __init__(self, stage: str, report=None, pipeline=None):
        super().__init__(f"uncrossing pipeline failed at stage '{stage}'")
        self.stage = stage
        self.report = report
        self.pipeline = pipeline


# input files


class ParseError(ShellkitError, ValueError):
    """A record in a text file could not be understood.

    :param message: what went wrong.
    :param source: name of the file or stream.
    :param line: 1-based line number, or ``None`` when the error is not tied
        to a single line.
    """

    def __init__(self, message: str, source: str = "<string>", line: int = None):
        self.message = message
        self.source = source
        self.line = line
        if line is None:
            super().__init__(f"{source}: {message}")
        else:
            super().__init__(f"{source}:{line}: {message}")
