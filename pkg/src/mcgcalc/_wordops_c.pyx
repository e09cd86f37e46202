# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernel.

Twin of ``_wordops_py``; identical call surface and semantics, with the
reduction stacks held in C arrays. Letters are nonzero signed integers;
a letter and its negative cancel.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND = "c"


cdef tuple _freeze(long* stack, Py_ssize_t top):
    cdef Py_ssize_t i
    return tuple([stack[i] for i in range(top)])


def reduce_letters(seq):
    """Freely reduce a letter sequence (single left-to-right stack scan)."""
    cdef tuple word = tuple(seq)
    cdef Py_ssize_t n = len(word)
    if n == 0:
        return ()
    cdef long* stack = <long*> PyMem_Malloc(n * sizeof(long))
    if stack == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0
    cdef long s
    try:
        for s in word:
            if top > 0 and stack[top - 1] == -s:
                top -= 1
            else:
                stack[top] = s
                top += 1
        return _freeze(stack, top)
    finally:
        PyMem_Free(stack)


def concat_reduced(tuple u, tuple v):
    """Concatenate two already-reduced words; only boundary pairs cancel."""
    cdef Py_ssize_t i = len(u)
    cdef Py_ssize_t j = 0
    cdef Py_ssize_t nv = len(v)
    while i > 0 and j < nv and <long> u[i - 1] == -<long> v[j]:
        i -= 1
        j += 1
    if j == 0:
        return u + v
    if i == 0:
        return v[j:]
    return u[:i] + v[j:]


def invert_reduced(tuple u):
    """Inverse of a reduced word: reverse the sequence, negate each letter."""
    cdef Py_ssize_t n = len(u)
    cdef Py_ssize_t i
    return tuple([-<long> u[n - 1 - i] for i in range(n)])


def substitute(tuple word, list images):
    """Replace every letter by its image and reduce.

    ``images[k]`` is the (reduced) image of the positive letter ``k``; a
    negative letter contributes the inverted image. Cancellation is
    handled on the fly with one stack, so the result is reduced.

    The image table and the word are unboxed into C buffers up front, so
    the substitution loop itself touches no Python objects.
    """
    cdef Py_ssize_t nimg = len(images)
    cdef Py_ssize_t nword = len(word)
    if nword == 0:
        return ()
    cdef Py_ssize_t* starts = NULL
    cdef Py_ssize_t* lens = NULL
    cdef long* flat = NULL
    cdef long* wbuf = NULL
    cdef long* stack = NULL
    cdef Py_ssize_t flat_total = 0, total = 0, top = 0
    cdef Py_ssize_t i, j, k, m, base
    cdef long s, t
    cdef tuple img
    try:
        starts = <Py_ssize_t*> PyMem_Malloc(nimg * sizeof(Py_ssize_t))
        lens = <Py_ssize_t*> PyMem_Malloc(nimg * sizeof(Py_ssize_t))
        wbuf = <long*> PyMem_Malloc(nword * sizeof(long))
        if starts == NULL or lens == NULL or wbuf == NULL:
            raise MemoryError()
        for k in range(nimg):
            img = <tuple> images[k]
            m = len(img)
            starts[k] = flat_total
            lens[k] = m
            flat_total += m
        if flat_total > 0:
            flat = <long*> PyMem_Malloc(flat_total * sizeof(long))
            if flat == NULL:
                raise MemoryError()
            for k in range(nimg):
                img = <tuple> images[k]
                base = starts[k]
                for j in range(lens[k]):
                    flat[base + j] = <long> img[j]
        for i in range(nword):
            s = <long> word[i]
            wbuf[i] = s
            total += lens[s if s > 0 else -s]
        if total == 0:
            return ()
        stack = <long*> PyMem_Malloc(total * sizeof(long))
        if stack == NULL:
            raise MemoryError()
        for i in range(nword):
            s = wbuf[i]
            if s > 0:
                base = starts[s]
                m = lens[s]
                for j in range(m):
                    t = flat[base + j]
                    if top > 0 and stack[top - 1] == -t:
                        top -= 1
                    else:
                        stack[top] = t
                        top += 1
            else:
                base = starts[-s]
                m = lens[-s]
                for j in range(m - 1, -1, -1):
                    t = -flat[base + j]
                    if top > 0 and stack[top - 1] == -t:
                        top -= 1
                    else:
                        stack[top] = t
                        top += 1
        return _freeze(stack, top)
    finally:
        PyMem_Free(stack)
        PyMem_Free(wbuf)
        PyMem_Free(flat)
        PyMem_Free(starts)
        PyMem_Free(lens)
