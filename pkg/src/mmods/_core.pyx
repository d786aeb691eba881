# distutils: language = c++
# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled triple-store core.

Same interface and semantics as _core_py; triples are (s, p, o) integer id
tuples and -1 is the match wildcard.  Ids are assumed to fit in 32 bits
(term interning starts at 0 and counts up), which lets the (s,p) and (p,o)
index keys pack into one 64-bit word.
"""

from cython.operator cimport dereference as deref
from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

cdef int64_t WILDCARD = -1

cdef struct T3:
    int64_t s
    int64_t p
    int64_t o

cdef inline uint64_t _pack(int64_t a, int64_t b) noexcept:
    return ((<uint64_t>a & 0xFFFFFFFFu) << 32) | (<uint64_t>b & 0xFFFFFFFFu)


cdef class TripleStore:
    cdef vector[T3] _triples
    cdef unordered_map[uint64_t, unordered_set[int64_t]] _sp_objects
    cdef unordered_map[uint64_t, vector[int64_t]] _by_sp
    cdef unordered_map[uint64_t, vector[int64_t]] _by_po
    cdef unordered_map[int64_t, vector[int64_t]] _by_s
    cdef unordered_map[int64_t, vector[int64_t]] _by_p
    cdef unordered_map[int64_t, vector[int64_t]] _by_o

    cpdef bint add(self, int64_t s, int64_t p, int64_t o):
        """Insert a triple; returns True when it was not present before."""
        cdef uint64_t sp = _pack(s, p)
        cdef unordered_set[int64_t]* objs = &self._sp_objects[sp]
        if objs.count(o):
            return False
        objs.insert(o)
        cdef int64_t idx = <int64_t>self._triples.size()
        cdef T3 t
        t.s = s
        t.p = p
        t.o = o
        self._triples.push_back(t)
        self._by_sp[sp].push_back(idx)
        self._by_po[_pack(p, o)].push_back(idx)
        self._by_s[s].push_back(idx)
        self._by_p[p].push_back(idx)
        self._by_o[o].push_back(idx)
        return True

    cpdef bint contains(self, int64_t s, int64_t p, int64_t o):
        cdef unordered_map[uint64_t, unordered_set[int64_t]].iterator it
        it = self._sp_objects.find(_pack(s, p))
        if it == self._sp_objects.end():
            return False
        return deref(it).second.count(o) > 0

    def __len__(self):
        return self._triples.size()

    cpdef list triples(self):
        """All triples in insertion order."""
        cdef list out = []
        cdef size_t i
        for i in range(self._triples.size()):
            out.append((self._triples[i].s, self._triples[i].p, self._triples[i].o))
        return out

    cdef list _collect(self, vector[int64_t]* positions, int64_t s, int64_t p, int64_t o):
        cdef list out = []
        cdef size_t i
        cdef T3 t
        for i in range(positions[0].size()):
            t = self._triples[<size_t>positions[0][i]]
            if (s == WILDCARD or t.s == s) and (p == WILDCARD or t.p == p) \
                    and (o == WILDCARD or t.o == o):
                out.append((t.s, t.p, t.o))
        return out

    cpdef list match(self, int64_t s, int64_t p, int64_t o):
        """Triples agreeing with every non-wildcard position (-1 = wildcard)."""
        cdef unordered_map[uint64_t, vector[int64_t]].iterator pit
        cdef unordered_map[int64_t, vector[int64_t]].iterator sit
        if s != WILDCARD and p != WILDCARD:
            pit = self._by_sp.find(_pack(s, p))
            if pit == self._by_sp.end():
                return []
            return self._collect(&deref(pit).second, s, p, o)
        if p != WILDCARD and o != WILDCARD:
            pit = self._by_po.find(_pack(p, o))
            if pit == self._by_po.end():
                return []
            return self._collect(&deref(pit).second, s, p, o)
        if s != WILDCARD:
            sit = self._by_s.find(s)
            if sit == self._by_s.end():
                return []
            return self._collect(&deref(sit).second, s, p, o)
        if p != WILDCARD:
            sit = self._by_p.find(p)
            if sit == self._by_p.end():
                return []
            return self._collect(&deref(sit).second, s, p, o)
        if o != WILDCARD:
            sit = self._by_o.find(o)
            if sit == self._by_o.end():
                return []
            return self._collect(&deref(sit).second, s, p, o)
        return self.triples()

    cpdef TripleStore copy(self):
        cdef TripleStore dup = TripleStore.__new__(TripleStore)
        dup._triples = self._triples
        dup._sp_objects = self._sp_objects
        dup._by_sp = self._by_sp
        dup._by_po = self._by_po
        dup._by_s = self._by_s
        dup._by_p = self._by_p
        dup._by_o = self._by_o
        return dup


cpdef int64_t saturate(TripleStore store, list chains, list subclass_pairs, int64_t rdf_type):
    """Apply chain and subclass rules until fixpoint; returns triples added.

    Semantics match _core_py.saturate.  Index vectors only grow, so bounding
    each scan by the size observed at pass start yields the pass snapshot.
    """
    cdef int64_t total = 0
    cdef int64_t added
    cdef int64_t p1, p2, implied, sub, sup
    cdef bint inverted
    cdef size_t i, j, n, m
    cdef unordered_map[int64_t, vector[int64_t]].iterator pit
    cdef unordered_map[uint64_t, vector[int64_t]].iterator kit
    cdef vector[int64_t]* first
    cdef vector[int64_t]* second
    cdef T3 t1, t2
    while True:
        added = 0
        for chain in chains:
            p1 = chain[0]
            p2 = chain[1]
            inverted = chain[2]
            implied = chain[3]
            pit = store._by_p.find(p1)
            if pit == store._by_p.end():
                continue
            first = &deref(pit).second
            n = first[0].size()
            for i in range(n):
                t1 = store._triples[<size_t>first[0][i]]
                if inverted:
                    kit = store._by_po.find(_pack(p2, t1.o))
                    if kit == store._by_po.end():
                        continue
                else:
                    kit = store._by_sp.find(_pack(t1.o, p2))
                    if kit == store._by_sp.end():
                        continue
                second = &deref(kit).second
                m = second[0].size()
                for j in range(m):
                    t2 = store._triples[<size_t>second[0][j]]
                    if store.add(t1.s, implied, t2.s if inverted else t2.o):
                        added += 1
        for pair in subclass_pairs:
            sub = pair[0]
            sup = pair[1]
            kit = store._by_po.find(_pack(rdf_type, sub))
            if kit == store._by_po.end():
                continue
            second = &deref(kit).second
            m = second[0].size()
            for j in range(m):
                t2 = store._triples[<size_t>second[0][j]]
                if store.add(t2.s, rdf_type, sup):
                    added += 1
        if added == 0:
            return total
        total += added
