"""Pattern avoidance for cyclic permutations in one-line and standard cycle form."""

from .enumerator import (PlusMinusSplit, PositionPartition, count_class, enumerate_class,
                         naive_count_oracle, partition_by_two, sequence, split_plus_minus)
from .perm import (AvoidanceSpec, CycleWord, Pattern, Permutation, contains, find_occurrence,
                   from_cycle_word, from_one_line, in_class, inverse, is_cyclic,
                   to_standard_cycle_word)
from .sequences import SequenceFamily, binomial, closed_form, fibonacci, pell
from .verify import VerificationReport, verify_theorem

__version__ = "0.1.0"
