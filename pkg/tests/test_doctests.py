import doctest

import pytest

from dseqlab import bitcensus, primes, recipcensus


@pytest.mark.parametrize("module", [bitcensus, primes, recipcensus])
def test_docstring_examples(module):
    result = doctest.testmod(module)
    assert result.failed == 0
