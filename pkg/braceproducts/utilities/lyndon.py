r"""
Lyndon Words
============

Words over an ordered alphabet ``0 < 1 < ... < k-1`` encoded as tuples of
integers. A word is *Lyndon* if it is strictly smaller, lexicographically,
than each of its proper suffixes. Lyndon words index a basis of the free Lie
algebra via their standard bracketing.

Functions
---------

.. autosummary::

    is_lyndon
    is_prenecklace
    standard_factorization
    weighted_lyndon_words

References
----------

.. [Reutenauer] C. Reutenauer, "Free Lie Algebras", Oxford University Press,
   1993.

Contents
--------

"""


def _period(word):
    r"""Returns the Duval period of `word` or `None` if `word` is not a
    prenecklace."""
    p = 1
    for i in range(1, len(word)):
        if word[i] < word[i-p]:
            return None
        if word[i] > word[i-p]:
            p = i + 1
    return p


def is_prenecklace(word):
    r"""Returns `True` if `word` is a prefix of a power of a Lyndon word."""
    return len(word) > 0 and _period(word) is not None


def is_lyndon(word):
    r"""Returns `True` if `word` is a Lyndon word.

    Parameters
    ----------
    word : tuple
        A tuple of non-negative integers.

    Examples
    --------
    >>> is_lyndon((0, 0, 1))
    True
    >>> is_lyndon((0, 1, 0))
    False
    """
    word = tuple(word)
    if not word:
        return False
    return _period(word) == len(word)


def standard_factorization(word):
    r"""Returns the standard factorization `(u, v)` of a Lyndon word.

    `v` is the longest proper suffix of `word` which is itself a Lyndon word
    and `u` is the remaining prefix. Both factors are Lyndon and `u < v`.

    Parameters
    ----------
    word : tuple
        A Lyndon word of length at least two.

    Returns
    -------
    u, v : tuple
    """
    word = tuple(word)
    if len(word) < 2 or not is_lyndon(word):
        raise ValueError('%s is not a Lyndon word of length at least '
                         'two' % (word,))
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    # unreachable: the last letter is always a Lyndon suffix
    raise ValueError('no Lyndon suffix found for %s' % (word,))


def weighted_lyndon_words(weights, max_weight):
    r"""Yields the Lyndon words of total weight at most `max_weight`.

    The letter `i` carries weight ``weights[i]``. Words are produced in
    lexicographic order by a depth-first extension of prenecklaces, so
    prefixes that cannot start a Lyndon word are never extended.

    Parameters
    ----------
    weights : sequence of int
        Positive weight of each letter.
    max_weight : int

    Yields
    ------
    word : tuple
    """
    weights = tuple(weights)
    if any(w < 1 for w in weights):
        raise ValueError('letter weights must be positive')
    alphabet = range(len(weights))

    def extend(word, period, weight):
        if period == len(word):
            yield word
        for c in alphabet:
            w = weight + weights[c]
            if w > max_weight:
                continue
            i = len(word)
            ref = word[i-period]
            if c < ref:
                continue
            new_period = i + 1 if c > ref else period
            for result in extend(word + (c,), new_period, w):
                yield result

    for c in alphabet:
        if weights[c] <= max_weight:
            for result in extend((c,), 1, weights[c]):
                yield result
