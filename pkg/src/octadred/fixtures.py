"""Hand-encoded reference tables for the genus-3 catalog.

Transcribed once from the published correspondence tables and degeneration
diagrams and reviewed against them; the generators in the catalog module
must reproduce these, never the other way around.

Contents: the 42 stable-type names with codimension, dual graphs and the
two degeneration-move edge lists; the 32 hyperelliptic type names with the
(engine-less) cluster-picture dictionary; and one atlas row per type giving
the subspace-graph shape and the unlabelled picture orbit with
multiplicities (27 plain rows, 32 hyperelliptic rows).

Picture entry grammar: ("alpha1", "AB"), ("alpha2", "ABCH"), ("chi1",
"AB", "CDE", "FGH"), ("chi2", "ABC"), ("phi1", (pair, pair), (pair, pair)),
("phi2", "ABC", "FGH"), ("phi3", "ABCD"), ("line", "ABCD"), ("tcu",).

Subspace-graph entry: recursive (label, boxed, children) with label "6",
"6*" or the subspace dimension, children sorted.
"""

from functools import lru_cache

TYPE_CODIM = {'0----0': 4,
 '0---0e': 4,
 '0---0m': 5,
 '0---0n': 4,
 '0e=0e': 4,
 '0eee': 3,
 '0m=0e': 5,
 '0m=0m': 6,
 '0mee': 4,
 '0mme': 5,
 '0mmm': 6,
 '0n=0e': 4,
 '0n=0m': 5,
 '0n=0n': 4,
 '0nee': 3,
 '0nme': 4,
 '0nmm': 5,
 '0nne': 3,
 '0nnm': 4,
 '0nnn': 3,
 '1---0': 3,
 '1=0e': 3,
 '1=0m': 4,
 '1=0n': 3,
 '1=1': 2,
 '1ee': 2,
 '1me': 3,
 '1mm': 4,
 '1ne': 2,
 '1nm': 3,
 '1nn': 2,
 '2e': 1,
 '2m': 2,
 '2n': 1,
 '3': 0,
 'BRAID': 5,
 'CAVE': 5,
 'Z=0e': 5,
 'Z=0m': 6,
 'Z=0n': 5,
 'Z=1': 4,
 'Z=Z': 6}

SM3_EDGES = (('0----0', 'CAVE'),
 ('0---0e', '0---0m'),
 ('0---0e', 'Z=0e'),
 ('0---0m', 'Z=0m'),
 ('0---0n', '0---0m'),
 ('0---0n', 'CAVE'),
 ('0---0n', 'Z=0n'),
 ('0e=0e', '0m=0e'),
 ('0eee', '0mee'),
 ('0m=0e', '0m=0m'),
 ('0mee', '0mme'),
 ('0mme', '0mmm'),
 ('0n=0e', '0m=0e'),
 ('0n=0e', '0n=0m'),
 ('0n=0e', 'Z=0e'),
 ('0n=0m', '0m=0m'),
 ('0n=0m', 'Z=0m'),
 ('0n=0n', '0n=0m'),
 ('0n=0n', 'Z=0n'),
 ('0nee', '0e=0e'),
 ('0nee', '0mee'),
 ('0nee', '0nme'),
 ('0nme', '0m=0e'),
 ('0nme', '0mme'),
 ('0nme', '0nmm'),
 ('0nmm', '0m=0m'),
 ('0nmm', '0mmm'),
 ('0nne', '0---0e'),
 ('0nne', '0n=0e'),
 ('0nne', '0nme'),
 ('0nne', '0nnm'),
 ('0nnm', '0---0m'),
 ('0nnm', '0n=0m'),
 ('0nnm', '0nmm'),
 ('0nnn', '0----0'),
 ('0nnn', '0---0n'),
 ('0nnn', '0n=0n'),
 ('0nnn', '0nnm'),
 ('1---0', '0---0e'),
 ('1---0', '0---0n'),
 ('1---0', 'Z=1'),
 ('1=0e', '0e=0e'),
 ('1=0e', '0n=0e'),
 ('1=0e', '1=0m'),
 ('1=0m', '0m=0e'),
 ('1=0m', '0n=0m'),
 ('1=0n', '0n=0e'),
 ('1=0n', '0n=0n'),
 ('1=0n', '1=0m'),
 ('1=0n', 'Z=1'),
 ('1=1', '1=0e'),
 ('1=1', '1=0n'),
 ('1ee', '0eee'),
 ('1ee', '0nee'),
 ('1ee', '1me'),
 ('1me', '0mee'),
 ('1me', '0nme'),
 ('1me', '1mm'),
 ('1mm', '0mme'),
 ('1mm', '0nmm'),
 ('1ne', '0nee'),
 ('1ne', '0nne'),
 ('1ne', '1=0e'),
 ('1ne', '1me'),
 ('1ne', '1nm'),
 ('1nm', '0nme'),
 ('1nm', '0nnm'),
 ('1nm', '1=0m'),
 ('1nm', '1mm'),
 ('1nn', '0nne'),
 ('1nn', '0nnn'),
 ('1nn', '1---0'),
 ('1nn', '1=0n'),
 ('1nn', '1nm'),
 ('2e', '1ee'),
 ('2e', '1ne'),
 ('2e', '2m'),
 ('2m', '1me'),
 ('2m', '1nm'),
 ('2n', '1=1'),
 ('2n', '1ne'),
 ('2n', '1nn'),
 ('2n', '2m'),
 ('3', '2e'),
 ('3', '2n'),
 ('CAVE', 'BRAID'),
 ('CAVE', 'Z=Z'),
 ('Z=0e', 'Z=0m'),
 ('Z=0n', 'Z=0m'),
 ('Z=0n', 'Z=Z'),
 ('Z=1', 'Z=0e'),
 ('Z=1', 'Z=0n'))

SM3HE_EDGES = (('0----0', 'Z=Z'),
 ('0e=0e', '0m=0e'),
 ('0m=0e', '0m=0m'),
 ('0n=0e', '0m=0e'),
 ('0n=0e', '0n=0m'),
 ('0n=0e', 'Z=0e'),
 ('0n=0m', '0m=0m'),
 ('0n=0m', 'Z=0m'),
 ('0n=0n', '0n=0m'),
 ('0n=0n', 'Z=0n'),
 ('0nee', '0nme'),
 ('0nme', '0nmm'),
 ('0nne', '0nme'),
 ('0nne', '0nnm'),
 ('0nne', 'Z=0e'),
 ('0nnm', '0nmm'),
 ('0nnm', 'Z=0m'),
 ('0nnn', '0----0'),
 ('0nnn', '0nnm'),
 ('0nnn', 'Z=0n'),
 ('1=0e', '0e=0e'),
 ('1=0e', '0n=0e'),
 ('1=0e', '1=0m'),
 ('1=0m', '0m=0e'),
 ('1=0m', '0n=0m'),
 ('1=0n', '0n=0e'),
 ('1=0n', '0n=0n'),
 ('1=0n', '1=0m'),
 ('1=0n', 'Z=1'),
 ('1=1', '1=0e'),
 ('1=1', '1=0n'),
 ('1ee', '0e=0e'),
 ('1ee', '0nee'),
 ('1ee', '1me'),
 ('1me', '0m=0e'),
 ('1me', '0nme'),
 ('1me', '1mm'),
 ('1mm', '0m=0m'),
 ('1mm', '0nmm'),
 ('1ne', '0n=0e'),
 ('1ne', '0nee'),
 ('1ne', '0nne'),
 ('1ne', '1me'),
 ('1ne', '1nm'),
 ('1nm', '0n=0m'),
 ('1nm', '0nme'),
 ('1nm', '0nnm'),
 ('1nm', '1mm'),
 ('1nn', '0n=0n'),
 ('1nn', '0nne'),
 ('1nn', '0nnn'),
 ('1nn', '1nm'),
 ('1nn', 'Z=1'),
 ('2e', '1=0e'),
 ('2e', '1ee'),
 ('2e', '1ne'),
 ('2e', '2m'),
 ('2m', '1=0m'),
 ('2m', '1me'),
 ('2m', '1nm'),
 ('2n', '1=0n'),
 ('2n', '1ne'),
 ('2n', '1nn'),
 ('2n', '2m'),
 ('3', '1=1'),
 ('3', '2e'),
 ('3', '2n'),
 ('Z=0e', 'Z=0m'),
 ('Z=0n', 'Z=0m'),
 ('Z=0n', 'Z=Z'),
 ('Z=1', 'Z=0e'),
 ('Z=1', 'Z=0n'))

HYPERELLIPTIC_TYPES = frozenset(['0----0',
 '0e=0e',
 '0m=0e',
 '0m=0m',
 '0n=0e',
 '0n=0m',
 '0n=0n',
 '0nee',
 '0nme',
 '0nmm',
 '0nne',
 '0nnm',
 '0nnn',
 '1=0e',
 '1=0m',
 '1=0n',
 '1=1',
 '1ee',
 '1me',
 '1mm',
 '1ne',
 '1nm',
 '1nn',
 '2e',
 '2m',
 '2n',
 '3',
 'Z=0e',
 'Z=0m',
 'Z=0n',
 'Z=1',
 'Z=Z']
)

DUAL_GRAPH_DATA = {'0----0': ((0, 0), ((0, 1), (0, 1), (0, 1), (0, 1))),
 '0---0e': ((0, 0, 1), ((0, 1), (0, 1), (0, 1), (1, 2))),
 '0---0m': ((0, 0, 0), ((0, 1), (0, 1), (0, 1), (1, 2), (2, 2))),
 '0---0n': ((0, 0), ((0, 1), (0, 1), (0, 1), (1, 1))),
 '0e=0e': ((0, 0, 1, 1), ((0, 1), (0, 1), (0, 3), (1, 2))),
 '0eee': ((0, 1, 1, 1), ((0, 1), (0, 2), (0, 3))),
 '0m=0e': ((0, 0, 0, 1), ((0, 1), (0, 1), (0, 3), (1, 2), (2, 2))),
 '0m=0m': ((0, 0, 0, 0), ((0, 1), (0, 1), (0, 3), (1, 2), (2, 2), (3, 3))),
 '0mee': ((0, 0, 1, 1), ((0, 1), (0, 2), (0, 3), (1, 1))),
 '0mme': ((0, 0, 0, 1), ((0, 1), (0, 2), (0, 3), (1, 1), (2, 2))),
 '0mmm': ((0, 0, 0, 0), ((0, 1), (0, 2), (0, 3), (1, 1), (2, 2), (3, 3))),
 '0n=0e': ((0, 0, 1), ((0, 0), (0, 1), (0, 1), (1, 2))),
 '0n=0m': ((0, 0, 0), ((0, 0), (0, 1), (0, 1), (1, 2), (2, 2))),
 '0n=0n': ((0, 0), ((0, 0), (0, 1), (0, 1), (1, 1))),
 '0nee': ((1, 0, 1), ((0, 1), (1, 1), (1, 2))),
 '0nme': ((0, 0, 1), ((0, 0), (0, 1), (1, 1), (1, 2))),
 '0nmm': ((0, 0, 0), ((0, 0), (0, 1), (1, 1), (1, 2), (2, 2))),
 '0nne': ((1, 0), ((0, 1), (1, 1), (1, 1))),
 '0nnm': ((0, 0), ((0, 0), (0, 1), (1, 1), (1, 1))),
 '0nnn': ((0,), ((0, 0), (0, 0), (0, 0))),
 '1---0': ((1, 0), ((0, 1), (0, 1), (0, 1))),
 '1=0e': ((1, 0, 1), ((0, 1), (0, 1), (1, 2))),
 '1=0m': ((1, 0, 0), ((0, 1), (0, 1), (1, 2), (2, 2))),
 '1=0n': ((0, 1), ((0, 0), (0, 1), (0, 1))),
 '1=1': ((1, 1), ((0, 1), (0, 1))),
 '1ee': ((1, 1, 1), ((0, 1), (1, 2))),
 '1me': ((0, 1, 1), ((0, 0), (0, 1), (1, 2))),
 '1mm': ((0, 1, 0), ((0, 0), (0, 1), (1, 2), (2, 2))),
 '1ne': ((1, 1), ((0, 1), (1, 1))),
 '1nm': ((0, 1), ((0, 0), (0, 1), (1, 1))),
 '1nn': ((1,), ((0, 0), (0, 0))),
 '2e': ((2, 1), ((0, 1),)),
 '2m': ((2, 0), ((0, 1), (1, 1))),
 '2n': ((2,), ((0, 0),)),
 '3': ((3,), ()),
 'BRAID': ((0, 0, 0, 0), ((0, 1), (0, 2), (0, 3), (1, 3), (2, 3))),
 'CAVE': ((0, 0, 0), ((0, 1), (0, 1), (0, 2), (1, 2), (1, 2))),
 'Z=0e': ((0, 0, 0, 1), ((0, 1), (0, 1), (0, 2), (1, 2), (2, 3))),
 'Z=0m': ((0, 0, 0, 0), ((0, 1), (0, 1), (0, 2), (1, 2), (2, 3), (3, 3))),
 'Z=0n': ((0, 0, 0), ((0, 1), (0, 1), (0, 2), (1, 2), (2, 2))),
 'Z=1': ((0, 0, 1), ((0, 1), (0, 1), (0, 2), (1, 2))),
 'Z=Z': ((0, 0, 0, 0), ((0, 1), (0, 1), (0, 2), (1, 3), (2, 3), (2, 3)))}

CLUSTER_PICTURES = {'0----0': '((* *) (* *) (* *) (* *))',
 '0e=0e': '(((* * *) *) (* * *) *)',
 '0m=0e': '((((* *) *) *) (* * *) *)',
 '0m=0m': '((((* *) *) *) ((* *) *) *)',
 '0n=0e': '(((* * *) *) (* *) * *)',
 '0n=0m': '(((* *) * *) (* * *) *)',
 '0n=0n': '(((* *) * *) (* *) * *)',
 '0nee': '((* * *) (* * *) (* *))',
 '0nme': '(((* *) *) (* * *) (* *))',
 '0nmm': '(((* *) *) ((* *) *) (* *))',
 '0nne': '((* * *) (* *) (* *) *)',
 '0nnm': '(((* *) *) (* *) (* *) *)',
 '0nnn': '((* *) (* *) (* *) * *)',
 '1=0e': '((* * *) ((* * *) *) * * * *)',
 '1=0m': '((((* *) *) *) * * * *)',
 '1=0n': '((* *) ((* *) * *) * * * *)',
 '1=1': '((* * * *) * * * *)',
 '1ee': '((* * *) (* * *) * *)',
 '1me': '((* *) ((* *) *) (* * *) * *)',
 '1mm': '(((* *) *) ((* *) *) * *)',
 '1ne': '((* *) (* * *) * * *)',
 '1nm': '((* *) ((* *) *) (* *) * * *)',
 '1nn': '((* *) (* *) * * * *)',
 '2e': '((* * *) * * * * *)',
 '2m': '(((* *) *) * * * * *)',
 '2n': '((* *) * * * * * *)',
 '3': '(* * * * * * * *)',
 'Z=0e': '(((* *) (* *)) (* * *) *)',
 'Z=0m': '(((* *) (* *)) ((* *) *) *)',
 'Z=0n': '(((* *) (* *)) (* *) * *)',
 'Z=1': '(((* *) (* *)) * * * *)',
 'Z=Z': '(((* *) (* *)) (* *) (* *))'}

ATLAS_NH_DATA = [('3', ('6', False, ()), (((), 36),)),
 ('2n',
  ('6', False, (('1', False, ()),)),
  (((('alpha1', 'AB'),), 16), ((('alpha2', 'ABCH'),), 20))),
 ('2e',
  ('6', False, (('2', False, ()),)),
  (((('chi1', 'AB', 'CDE', 'FGH'),), 30), ((('chi2', 'ABC'),), 6))),
 ('1nn',
  ('6', False, (('1', False, ()), ('1', False, ()))),
  (((('alpha1', 'AH'), ('alpha1', 'BC')), 8),
   ((('alpha1', 'AH'), ('alpha2', 'ABCH')), 16),
   ((('alpha2', 'AFGH'), ('alpha2', 'ABCH')), 12))),
 ('2m',
  ('6', False, (('2', False, (('1', False, ()),)),)),
  (((('chi2', 'ABC'), ('alpha1', 'AB')), 6),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB')), 10),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'BCDE')), 20))),
 ('1ne',
  ('6', False, (('1', False, ()), ('2', False, ()))),
  (((('chi2', 'ABC'), ('alpha1', 'GH')), 4),
   ((('chi2', 'ABC'), ('alpha2', 'ABCH')), 2),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'CD')), 12),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'ABCH')), 18))),
 ('1ee',
  ('6', False, (('2', False, ()), ('2', False, ()))),
  (((('chi2', 'ABC'), ('chi2', 'DEF')), 3),
   ((('chi2', 'ABC'), ('chi1', 'GH', 'ABC', 'DEF')), 6),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('chi1', 'BC', 'DEF', 'AGH')), 27))),
 ('0nnn',
  ('6', False, (('1', False, ()), ('1', False, ()), ('1', False, ()))),
  (((('alpha1', 'FG'), ('alpha1', 'AH'), ('alpha1', 'BC')), 4),
   ((('alpha2', 'AFGH'), ('alpha1', 'AH'), ('alpha1', 'BC')), 12),
   ((('alpha1', 'AH'), ('alpha2', 'AFGH'), ('alpha2', 'ABCH')), 12),
   ((('alpha2', 'ABCH'), ('alpha2', 'AFGH')), 8))),
 ('1---0',
  ('6', False, (('1', True, ()), ('1', True, ()), ('1', True, ()))),
  (((('alpha2', 'ABCH'), ('alpha1', 'AH'), ('alpha1', 'BC')), 24),
   ((('alpha2', 'AFGH'), ('alpha2', 'ABCH')), 12))),
 ('0nne',
  ('6', False, (('1', False, ()), ('1', False, ()), ('2', False, ()))),
  (((('chi2', 'ABH'), ('alpha1', 'DE'), ('alpha1', 'FG')), 2),
   ((('chi2', 'ABH'), ('alpha2', 'ABCH'), ('alpha1', 'FG')), 4),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'CD'), ('alpha1', 'GH')), 6),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'CD')), 12),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'DEFG')), 12))),
 ('1nm',
  ('6', False, (('1', False, ()), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'ABH'), ('alpha1', 'AH'), ('alpha1', 'FG')), 4),
   ((('chi2', 'ABH'), ('alpha1', 'AH'), ('alpha2', 'ABCH')), 2),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB'), ('alpha1', 'CD')), 4),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB')), 6),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'BCDE'), ('alpha1', 'CD')), 8),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'BCDE')), 12))),
 ('1me',
  ('6', False, (('2', False, ()), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'BCD'), ('chi2', 'AGH'), ('alpha1', 'BC')), 3),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'GH'), ('chi2', 'FGH')), 3),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB'), ('chi2', 'FGH')), 1),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'AFGH'), ('chi2', 'FGH')), 2),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('chi1', 'BC', 'DEF', 'AGH'), ('alpha1', 'BC')), 9),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('chi1', 'BC', 'DEF', 'AGH'), ('alpha2', 'ABGH')), 18))),
 ('0nee',
  ('6', False, (('1', False, ()), ('2', False, ()), ('2', False, ()))),
  (((('alpha1', 'AB'), ('chi2', 'CDE'), ('chi2', 'FGH')), 1),
   ((('alpha2', 'AFGH'), ('chi2', 'CDE'), ('chi2', 'FGH')), 2),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('chi2', 'FGH'), ('alpha1', 'CD')), 6),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('chi1', 'BC', 'DEF', 'AGH'), ('alpha1', 'EF')), 9),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('chi1', 'GH', 'ABC', 'DEF')), 18))),
 ('0eee',
  ('6', False, (('2', False, ()), ('2', False, ()), ('2', False, ()))),
  (((('chi1', 'AB', 'CDE', 'FGH'), ('chi2', 'CDE'), ('chi2', 'FGH')), 9),
   ((('chi1', 'CD', 'EFG', 'ABH'),), 27))),
 ('0----0',
  ('6', False, (('1', True, ()), ('1', True, ()), ('1', True, ()), ('1', True, ()))),
  (((('alpha1', 'BC'), ('alpha1', 'DE'), ('alpha1', 'FG'), ('alpha1', 'AH')), 4),
   ((('alpha1', 'BC'), ('alpha1', 'FG'), ('alpha2', 'ABCH'), ('alpha2', 'AFGH')), 24),
   ((('alpha2', 'ABCH'), ('alpha2', 'AFGH')), 8))),
 ('0---0n',
  ('6', False, (('1', False, ()), ('1', True, ()), ('1', True, ()), ('1', True, ()))),
  (((('alpha2', 'AFGH'), ('alpha1', 'FG'), ('alpha1', 'AH'), ('alpha1', 'BC')), 12),
   ((('alpha2', 'AFGH'), ('alpha2', 'ABCH'), ('alpha1', 'FG'), ('alpha1', 'AH')), 12),
   ((('alpha2', 'AFGH'), ('alpha2', 'ABCH'), ('alpha1', 'AH')), 4),
   ((('alpha2', 'ABCH'), ('alpha2', 'AFGH')), 8))),
 ('0nnm',
  ('6', False, (('1', False, ()), ('1', False, ()), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'AGH'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('alpha1', 'DE')), 2),
   ((('chi2', 'AGH'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('alpha2', 'AFGH')), 4),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'GH'), ('alpha1', 'AB'), ('alpha1', 'CD')), 2),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'GH'), ('alpha2', 'AFGH'), ('alpha1', 'CD')), 4),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB'), ('alpha1', 'GH')), 4),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB'), ('alpha2', 'ABCH')), 4),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'ABCH'), ('alpha2', 'BCDE'), ('alpha1', 'FG')), 8),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'ABCH'), ('alpha2', 'BCDE')), 8))),
 ('0---0e',
  ('6', False, (('1', True, ()), ('1', True, ()), ('1', True, ()), ('2', False, ()))),
  (((('chi2', 'AGH'), ('alpha2', 'BCDE'), ('alpha1', 'BC'), ('alpha1', 'DE')), 6),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'GH'), ('alpha1', 'CD')), 18),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'DEFG')), 12))),
 ('1mm',
  ('6', False, (('2', False, (('1', False, ()),)), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'AGH'), ('chi2', 'BCD'), ('alpha1', 'GH'), ('alpha1', 'CD')), 3),
   ((('chi2', 'AGH'), ('chi1', 'EF', 'AGH', 'BCD'), ('alpha1', 'GH'), ('alpha1', 'EF')), 2),
   ((('chi2', 'AGH'), ('chi1', 'EF', 'AGH', 'BCD'), ('alpha1', 'GH'), ('alpha2', 'AFGH')), 4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC')),
    3),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha2', 'ABGH')),
    12),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('alpha2', 'ABGH')),
    12))),
 ('0nme',
  ('6', False, (('1', False, ()), ('2', False, ()), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'AGH'), ('chi2', 'BCD'), ('alpha1', 'AH'), ('alpha1', 'EF')), 1),
   ((('chi2', 'AGH'), ('chi2', 'BCD'), ('alpha1', 'AH'), ('alpha2', 'BCDE')), 2),
   ((('chi2', 'AGH'), ('chi1', 'EF', 'AGH', 'BCD'), ('alpha1', 'AH'), ('alpha1', 'CD')), 3),
   ((('chi2', 'AGH'), ('chi1', 'EF', 'AGH', 'BCD'), ('alpha1', 'CD'), ('alpha2', 'BCDE')), 2),
   ((('chi2', 'AGH'), ('chi1', 'EF', 'AGH', 'BCD'), ('alpha1', 'CD'), ('alpha1', 'EF')), 1),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha1', 'EF')),
    3),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('chi1', 'BC', 'DEF', 'AGH'), ('alpha1', 'AH')), 6),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'EF'),
     ('alpha2', 'ABCD')),
    6),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('chi1', 'BC', 'DEF', 'AGH'), ('alpha2', 'ABCD')), 12))),
 ('0mee',
  ('6', False, (('2', False, ()), ('2', False, ()), ('2', False, (('1', False, ()),)))),
  (((('chi1', 'EF', 'AGH', 'BCD'), ('alpha1', 'EF'), ('chi2', 'BCD'), ('chi2', 'AGH')), 1),
   ((('chi1', 'EF', 'AGH', 'BCD'), ('alpha1', 'AH'), ('chi2', 'BCD'), ('chi2', 'AGH')), 6),
   ((('chi1', 'EF', 'AGH', 'BCD'), ('alpha2', 'AFGH'), ('chi2', 'BCD'), ('chi2', 'AGH')), 2),
   ((('chi1', 'CD', 'EFG', 'ABH'), ('alpha1', 'CD')), 9),
   ((('chi1', 'CD', 'EFG', 'ABH'), ('alpha2', 'DEFG')), 18))),
 ('CAVE',
  ('6',
   False,
   (('1', True, ()), ('1', True, ()), ('1', True, ()), ('1', True, ()), ('1', True, ()))),
  (((('alpha2', 'AFGH'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('alpha1', 'DE'), ('alpha1', 'FG')),
    4),
   ((('alpha2', 'AFGH'), ('alpha2', 'ABCH'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('alpha1', 'FG')),
    16),
   ((('alpha2', 'AFGH'), ('alpha2', 'ABCH'), ('alpha1', 'BC'), ('alpha1', 'FG')), 8),
   ((('alpha2', 'ABCH'), ('alpha2', 'AFGH')), 8))),
 ('0---0m',
  ('6',
   False,
   (('1', True, ()), ('1', True, ()), ('1', True, ()), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'ABH'), ('alpha1', 'AH'), ('alpha2', 'DEFG'), ('alpha1', 'DE'), ('alpha1', 'FG')), 6),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB'), ('alpha1', 'CD'), ('alpha1', 'GH')), 6),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'BCDE'), ('alpha1', 'CD'), ('alpha1', 'GH')), 12),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB'), ('alpha2', 'ABCH')), 4),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'BCDE'), ('alpha2', 'ABCH')), 8))),
 ('0nmm',
  ('6',
   False,
   (('1', False, ()), ('2', False, (('1', False, ()),)), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'AGH'), ('chi2', 'BCD'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('alpha1', 'EF')), 1),
   ((('chi2', 'AGH'), ('chi2', 'BCD'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('alpha2', 'AFGH')), 2),
   ((('chi2', 'AGH'),
     ('chi1', 'EF', 'AGH', 'BCD'),
     ('alpha1', 'EF'),
     ('alpha1', 'AH'),
     ('alpha1', 'CD')),
    2),
   ((('chi2', 'AGH'),
     ('chi1', 'EF', 'AGH', 'BCD'),
     ('alpha2', 'BCDE'),
     ('alpha1', 'AH'),
     ('alpha1', 'CD')),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC'),
     ('alpha1', 'EF')),
    1),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC')),
    2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('alpha1', 'BC'),
     ('alpha1', 'EF')),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('alpha2', 'ABGH'),
     ('alpha1', 'EF')),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('alpha1', 'BC')),
    8),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('alpha2', 'CDEF')),
    8))),
 ('0mme',
  ('6',
   False,
   (('2', False, ()), ('2', False, (('1', False, ()),)), ('2', False, (('1', False, ()),)))),
  (((('chi1', 'EF', 'AGH', 'BCD'),
     ('chi2', 'AGH'),
     ('chi2', 'BCD'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC')),
    3),
   ((('chi1', 'EF', 'AGH', 'BCD'),
     ('chi2', 'AGH'),
     ('chi2', 'BCD'),
     ('alpha1', 'EF'),
     ('alpha1', 'BC')),
    2),
   ((('chi1', 'EF', 'AGH', 'BCD'),
     ('chi2', 'AGH'),
     ('chi2', 'BCD'),
     ('alpha2', 'AFGH'),
     ('alpha1', 'BC')),
    4),
   ((('chi1', 'CD', 'EFG', 'ABH'), ('alpha1', 'CD')), 3),
   ((('chi1', 'CD', 'EFG', 'ABH'), ('alpha2', 'DEFG')), 12),
   ((('chi1', 'CD', 'EFG', 'ABH'), ('alpha2', 'DEFG')), 12))),
 ('BRAID',
  ('6',
   False,
   (('1', True, ()),
    ('1', True, ()),
    ('1', True, ()),
    ('1', True, ()),
    ('1', True, ()),
    ('1', True, ()))),
  (((('alpha1', 'BC'),
     ('alpha1', 'DE'),
     ('alpha1', 'FG'),
     ('alpha1', 'AH'),
     ('alpha2', 'AFGH'),
     ('alpha2', 'ABCH')),
    12),
   ((('alpha1', 'BC'), ('alpha1', 'FG'), ('alpha1', 'AH'), ('alpha2', 'AFGH'), ('alpha2', 'ABCH')),
    16),
   ((('alpha2', 'ABCH'), ('alpha2', 'AFGH')), 8))),
 ('0mmm',
  ('6',
   False,
   (('2', False, (('1', False, ()),)),
    ('2', False, (('1', False, ()),)),
    ('2', False, (('1', False, ()),)))),
  (((('chi1', 'EF', 'AGH', 'BCD'),
     ('chi2', 'AGH'),
     ('chi2', 'BCD'),
     ('alpha1', 'EF'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC')),
    3),
   ((('chi1', 'EF', 'AGH', 'BCD'),
     ('chi2', 'AGH'),
     ('chi2', 'BCD'),
     ('alpha2', 'AFGH'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC')),
    6),
   ((('chi1', 'CD', 'EFG', 'ABH'), ('alpha1', 'CD')), 1),
   ((('chi1', 'CD', 'EFG', 'ABH'), ('alpha2', 'DEFG')), 6),
   ((('chi1', 'CD', 'EFG', 'ABH'), ('alpha2', 'DEFG')), 12),
   ((('chi1', 'CD', 'EFG', 'ABH'), ('alpha2', 'DEFG')), 8)))]

ATLAS_HE_DATA = [('3', ('6*', False, ()), (((('tcu',),), 1), ((('line', 'ABCD'),), 35))),
 ('2n',
  ('6*', False, (('1', False, ()),)),
  (((('alpha1', 'AB'), ('tcu',)), 1),
   ((('alpha1', 'AB'), ('line', 'ABCD')), 15),
   ((('alpha2', 'ABCH'), ('line', 'ABCD')), 20))),
 ('1=1',
  ('6*', False, (('3', False, ()),)),
  (((('phi3', 'AFGH'),), 2),
   ((('phi2', 'CDE', 'FGH'),), 16),
   ((('phi1', ('AH', 'DE'), ('BC', 'FG')),), 18))),
 ('2e',
  ('6*', False, (('2', False, ()),)),
  (((('chi2', 'ABC'), ('tcu',)), 1),
   ((('chi2', 'ABC'), ('line', 'ABCD')), 5),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('line', 'ABCD')), 30))),
 ('1nn',
  ('6*', False, (('1', False, ()), ('1', False, ()))),
  (((('alpha1', 'AH'), ('alpha1', 'BC'), ('tcu',)), 1),
   ((('alpha1', 'AH'), ('alpha1', 'BC'), ('line', 'ABCH')), 1),
   ((('alpha1', 'AH'), ('alpha1', 'BC'), ('line', 'BCDE')), 6),
   ((('alpha1', 'AH'), ('alpha2', 'ABCH'), ('line', 'ABGH')), 16),
   ((('alpha2', 'AFGH'), ('alpha2', 'ABCH'), ('line', 'ABGH')), 12))),
 ('1=0n',
  ('6*', False, (('1', False, ()), ('3', False, ()))),
  (((('phi3', 'AFGH'), ('alpha1', 'AH')), 2),
   ((('phi2', 'CDE', 'FGH'), ('alpha1', 'CD')), 8),
   ((('phi2', 'CDE', 'FGH'), ('alpha2', 'ABGH')), 8),
   ((('alpha2', 'ABGH'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 12),
   ((('alpha1', 'AH'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 6))),
 ('2m',
  ('6*', False, (('2', False, (('1', False, ()),)),)),
  (((('chi2', 'ABC'), ('alpha1', 'AB'), ('tcu',)), 1),
   ((('chi2', 'ABC'), ('alpha1', 'AB'), ('line', 'ABCH')), 5),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB'), ('line', 'ABCD')), 10),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'BCDE'), ('line', 'ABCD')), 20))),
 ('1ne',
  ('6*', False, (('1', False, ()), ('2', False, ()))),
  (((('chi2', 'ABC'), ('alpha1', 'GH'), ('tcu',)), 1),
   ((('chi2', 'ABC'), ('alpha1', 'GH'), ('line', 'ABCD')), 3),
   ((('chi2', 'ABC'), ('alpha2', 'ABCH'), ('line', 'ABCD')), 2),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'CD'), ('line', 'ABCD')), 3),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'CD'), ('line', 'ABGH')), 9),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'ABCH'), ('line', 'ABCD')), 18))),
 ('1=0e',
  ('6*', False, (('2', False, ()), ('3', False, ()))),
  (((('phi3', 'AFGH'), ('chi2', 'AGH')), 2),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'CDE')), 4),
   ((('phi2', 'CDE', 'FGH'), ('chi1', 'DE', 'FGH', 'ABC')), 12),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 18))),
 ('1ee',
  ('6*', False, (('2', False, ()), ('2', False, ()))),
  (((('chi2', 'ABC'), ('chi2', 'DEF'), ('tcu',)), 1),
   ((('chi2', 'ABC'), ('chi2', 'DEF'), ('line', 'ABCH')), 2),
   ((('chi2', 'ABC'), ('chi1', 'GH', 'ABC', 'DEF'), ('line', 'ABCD')), 6),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('chi1', 'BC', 'DEF', 'AGH'), ('line', 'ABCH')), 9),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('chi1', 'BC', 'DEF', 'AGH'), ('line', 'AFGH')), 18))),
 ('0nnn',
  ('6*', False, (('1', False, ()), ('1', False, ()), ('1', False, ()))),
  (((('alpha1', 'FG'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('tcu',)), 1),
   ((('alpha1', 'FG'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('line', 'ABCH')), 3),
   ((('alpha2', 'AFGH'), ('alpha1', 'AH'), ('alpha1', 'DE'), ('line', 'ABGH')), 12),
   ((('alpha1', 'AH'), ('alpha2', 'AFGH'), ('alpha2', 'ABCH'), ('line', 'ABGH')), 12),
   ((('alpha2', 'ABCH'), ('alpha2', 'AFGH'), ('line', 'ABGH')), 8))),
 ('0n=0n',
  ('6*', False, (('1', False, ()), ('3', False, (('1', False, ()),)))),
  (((('phi3', 'AFGH'), ('alpha1', 'BC'), ('alpha1', 'AH')), 2),
   ((('alpha1', 'BC'), ('alpha1', 'AH'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 2),
   ((('alpha2', 'ABGH'), ('alpha1', 'AH'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 8),
   ((('alpha2', 'ABGH'), ('alpha2', 'ABCD'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 8),
   ((('phi2', 'CDE', 'FGH'), ('alpha2', 'ABCD'), ('alpha1', 'GH')), 8),
   ((('phi2', 'CDE', 'FGH'), ('alpha1', 'GH'), ('alpha1', 'CD')), 4),
   ((('phi2', 'CDE', 'FGH'), ('alpha2', 'ABCD'), ('alpha2', 'ABGH')), 4))),
 ('Z=1',
  ('6*', False, (('1', True, ()), ('1', True, ()), ('3', True, ()))),
  (((('phi3', 'AFGH'), ('alpha1', 'FG'), ('alpha1', 'AH')), 2),
   ((('alpha1', 'DE'), ('alpha1', 'AH'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 6),
   ((('alpha2', 'ABGH'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 12),
   ((('phi2', 'CDE', 'FGH'), ('alpha1', 'GH'), ('alpha2', 'ABGH')), 16))),
 ('0nne',
  ('6*', False, (('1', False, ()), ('1', False, ()), ('2', False, ()))),
  (((('chi2', 'ABH'), ('alpha1', 'DE'), ('alpha1', 'FG'), ('tcu',)), 1),
   ((('chi2', 'ABH'), ('alpha1', 'DE'), ('alpha1', 'FG'), ('line', 'ABCH')), 1),
   ((('chi2', 'ABH'), ('alpha2', 'ABCH'), ('alpha1', 'EF'), ('line', 'ABGH')), 4),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'CD'), ('alpha1', 'GH'), ('line', 'ABGH')), 6),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'ABCH'), ('alpha1', 'DE'), ('line', 'ABGH')), 12),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'ABCH'), ('line', 'ABCD')), 12))),
 ('1nm',
  ('6*', False, (('1', False, ()), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'ABH'), ('alpha1', 'AH'), ('alpha1', 'FG'), ('tcu',)), 1),
   ((('chi2', 'ABH'), ('alpha1', 'AH'), ('alpha1', 'FG'), ('line', 'ABCH')), 3),
   ((('chi2', 'ABH'), ('alpha1', 'AH'), ('alpha2', 'ABCH'), ('line', 'ABGH')), 2),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB'), ('alpha1', 'CD'), ('line', 'ABCD')), 1),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB'), ('alpha1', 'CD'), ('line', 'ABGH')), 3),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'ABCH'), ('alpha1', 'AB'), ('line', 'ABGH')), 6),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'BCDE'), ('alpha1', 'CD'), ('line', 'ABCD')), 2),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'BCDE'), ('alpha1', 'CD'), ('line', 'ABGH')), 6),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'ABCH'), ('alpha2', 'BCDE'), ('line', 'ABCD')), 12))),
 ('1=0m',
  ('6*', False, (('2', False, (('1', False, ()),)), ('3', False, ()))),
  (((('phi3', 'AFGH'), ('chi2', 'AGH'), ('alpha1', 'AH')), 2),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('alpha1', 'AH'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 6),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('alpha2', 'ABCD'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 12),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('alpha1', 'FG')), 4),
   ((('phi2', 'CDE', 'FGH'), ('chi1', 'FG', 'ABH', 'CDE'), ('alpha1', 'FG')), 4),
   ((('phi2', 'CDE', 'FGH'), ('chi1', 'FG', 'ABH', 'CDE'), ('alpha2', 'ABGH')), 8))),
 ('0n=0e',
  ('6*', False, (('2', False, ()), ('3', False, (('1', False, ()),)))),
  (((('phi3', 'AFGH'), ('chi2', 'AGH'), ('alpha1', 'BC')), 2),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('alpha1', 'BC'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 6),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('alpha2', 'ABGH'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 12),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('alpha1', 'DE')), 2),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('alpha2', 'ABCD')), 2),
   ((('phi2', 'CDE', 'FGH'), ('chi1', 'FG', 'ABH', 'CDE'), ('alpha1', 'DE')), 6),
   ((('phi2', 'CDE', 'FGH'), ('chi1', 'FG', 'ABH', 'CDE'), ('alpha2', 'ABCD')), 6))),
 ('1me',
  ('6*', False, (('2', False, ()), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'BCD'), ('chi2', 'AGH'), ('alpha1', 'BC'), ('tcu',)), 1),
   ((('chi2', 'BCD'), ('chi2', 'AGH'), ('alpha1', 'BC'), ('line', 'AFGH')), 2),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'GH'), ('chi2', 'FGH'), ('line', 'ABCD')), 3),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB'), ('chi2', 'FGH'), ('line', 'ABCD')), 1),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'AFGH'), ('chi2', 'FGH'), ('line', 'ABCD')), 2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'BC'),
     ('line', 'ABCH')),
    3),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'BC'),
     ('line', 'BCDE')),
    6),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABGH'),
     ('line', 'ABCH')),
    6),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABGH'),
     ('line', 'BCDE')),
    12))),
 ('0nee',
  ('6*', False, (('1', False, ()), ('2', False, ()), ('2', False, ()))),
  (((('alpha1', 'AB'), ('chi2', 'CDE'), ('chi2', 'FGH'), ('tcu',)), 1),
   ((('alpha2', 'AFGH'), ('chi2', 'BCD'), ('chi2', 'FGH'), ('line', 'EFGH')), 2),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('chi2', 'FGH'), ('alpha1', 'CD'), ('line', 'ABCD')), 6),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'EF'),
     ('line', 'ABCH')),
    9),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('chi1', 'GH', 'ABC', 'DEF')), 18))),
 ('0e=0e',
  ('6*', False, (('2', False, ()), ('3', False, (('2', False, ()),)))),
  (((('phi3', 'AFGH'), ('chi2', 'AGH'), ('chi2', 'BCD')), 2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    18),
   ((('phi2', 'CDE', 'FGH'), ('chi1', 'FG', 'ABH', 'CDE'), ('chi1', 'DE', 'FGH', 'ABC')), 9),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('chi1', 'DE', 'FGH', 'ABC')), 6),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('chi2', 'CDE')), 1))),
 ('0----0',
  ('6*', False, (('1', True, ()), ('1', True, ()), ('1', True, ()), ('1', True, ()))),
  (((('alpha1', 'BC'), ('alpha1', 'DE'), ('alpha1', 'FG'), ('alpha1', 'AH'), ('tcu',)), 1),
   ((('alpha1', 'BC'), ('alpha1', 'DE'), ('alpha1', 'FG'), ('alpha1', 'AH'), ('line', 'AFGH')), 3),
   ((('alpha1', 'BC'), ('alpha1', 'FG'), ('alpha2', 'ABCH'), ('alpha2', 'AFGH'), ('line', 'ABCD')),
    24),
   ((('alpha2', 'ABCH'), ('alpha2', 'AFGH'), ('line', 'ABCD')), 8))),
 ('Z=0n',
  ('6*', False, (('1', True, ()), ('1', True, ()), ('3', True, (('1', False, ()),)))),
  (((('phi3', 'AFGH'), ('alpha1', 'FG'), ('alpha1', 'AH'), ('alpha1', 'BC')), 2),
   ((('alpha1', 'FG'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    2),
   ((('alpha2', 'ABGH'), ('alpha1', 'AH'), ('alpha1', 'DE'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    4),
   ((('alpha2', 'ABGH'), ('alpha1', 'AH'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 4),
   ((('alpha2', 'ABGH'), ('alpha2', 'ABCD'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 8),
   ((('phi2', 'CDE', 'FGH'), ('alpha2', 'ABGH'), ('alpha2', 'ABCD'), ('alpha1', 'CD')), 8),
   ((('phi2', 'CDE', 'FGH'), ('alpha2', 'ABGH'), ('alpha1', 'GH'), ('alpha1', 'CD')), 8))),
 ('0nnm',
  ('6*', False, (('1', False, ()), ('1', False, ()), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'AGH'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('alpha1', 'DE'), ('tcu',)), 1),
   ((('chi2', 'AGH'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('alpha1', 'DE'), ('line', 'AFGH')), 1),
   ((('chi2', 'AGH'), ('alpha1', 'AH'), ('alpha1', 'CD'), ('alpha2', 'AFGH'), ('line', 'ABGH')), 4),
   ((('chi1', 'AB', 'CDE', 'FGH'),
     ('alpha1', 'GH'),
     ('alpha1', 'AB'),
     ('alpha1', 'CD'),
     ('line', 'ABGH')),
    2),
   ((('chi1', 'AB', 'CDE', 'FGH'),
     ('alpha1', 'GH'),
     ('alpha2', 'AFGH'),
     ('alpha1', 'CD'),
     ('line', 'ABGH')),
    4),
   ((('chi1', 'AB', 'CDE', 'FGH'),
     ('alpha1', 'AB'),
     ('alpha1', 'FG'),
     ('alpha2', 'DEFG'),
     ('line', 'ABCD')),
    4),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha1', 'AB'), ('alpha2', 'ABCH'), ('line', 'ABGH')), 4),
   ((('chi1', 'AB', 'CDE', 'FGH'),
     ('alpha2', 'ABCH'),
     ('alpha2', 'BCDE'),
     ('alpha1', 'FG'),
     ('line', 'ABCD')),
    8),
   ((('chi1', 'AB', 'CDE', 'FGH'), ('alpha2', 'ABCH'), ('alpha2', 'BCDE')), 8))),
 ('0n=0m',
  ('6*', False, (('2', False, (('1', False, ()),)), ('3', False, (('1', False, ()),)))),
  (((('phi3', 'AFGH'), ('chi2', 'AGH'), ('alpha1', 'AH'), ('alpha1', 'BC')), 2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha1', 'AH'),
     ('alpha2', 'ABGH'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha2', 'ABCD'),
     ('alpha1', 'BC'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha2', 'ABCD'),
     ('alpha2', 'ABGH'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    8),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('alpha1', 'GH'), ('alpha1', 'CD')), 2),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('alpha1', 'GH'), ('alpha2', 'ABCD')), 2),
   ((('phi2', 'CDE', 'FGH'), ('chi1', 'FG', 'ABH', 'CDE'), ('alpha1', 'FG'), ('alpha1', 'DE')), 2),
   ((('phi2', 'CDE', 'FGH'), ('chi1', 'FG', 'ABH', 'CDE'), ('alpha2', 'ABGH'), ('alpha1', 'DE')),
    4),
   ((('phi2', 'CDE', 'FGH'), ('chi1', 'FG', 'ABH', 'CDE'), ('alpha1', 'FG'), ('alpha2', 'ABCD')),
    2),
   ((('phi2', 'CDE', 'FGH'), ('chi1', 'FG', 'ABH', 'CDE'), ('alpha2', 'ABGH'), ('alpha2', 'ABCD')),
    4))),
 ('Z=0e',
  ('6*', False, (('1', True, ()), ('1', True, ()), ('3', True, (('2', False, ()),)))),
  (((('phi3', 'AFGH'), ('alpha1', 'FG'), ('alpha1', 'AH'), ('chi2', 'BCD')), 2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha1', 'FG'),
     ('alpha1', 'BC'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    6),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('alpha2', 'ABGH'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 12),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('alpha2', 'ABCD'), ('alpha1', 'CD')), 4),
   ((('phi2', 'CDE', 'FGH'), ('chi1', 'FG', 'ABH', 'CDE'), ('alpha2', 'ABCD'), ('alpha1', 'CD')),
    12))),
 ('0nme',
  ('6*', False, (('2', False, ()), ('2', False, ()), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'AGH'), ('chi2', 'BCD'), ('alpha1', 'AH'), ('alpha1', 'EF'), ('tcu',)), 1),
   ((('chi2', 'AGH'), ('chi2', 'CDE'), ('alpha1', 'AH'), ('alpha2', 'BCDE'), ('line', 'ABGH')), 2),
   ((('chi2', 'AGH'),
     ('chi1', 'EF', 'AGH', 'BCD'),
     ('alpha1', 'AH'),
     ('alpha1', 'CD'),
     ('line', 'ABGH')),
    3),
   ((('chi2', 'AGH'),
     ('chi1', 'EF', 'AGH', 'BCD'),
     ('alpha1', 'CD'),
     ('alpha2', 'BCDE'),
     ('line', 'ABGH')),
    2),
   ((('chi2', 'AGH'),
     ('chi1', 'EF', 'AGH', 'BCD'),
     ('alpha1', 'CD'),
     ('alpha1', 'EF'),
     ('line', 'ABGH')),
    1),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha1', 'EF'),
     ('line', 'ABCH')),
    3),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('chi1', 'BC', 'DEF', 'AGH'), ('alpha1', 'AH')), 6),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'EF'),
     ('alpha2', 'ABCD'),
     ('line', 'ABCH')),
    6),
   ((('chi1', 'AH', 'BCD', 'EFG'), ('chi1', 'BC', 'DEF', 'AGH'), ('alpha2', 'ABCD')), 12))),
 ('1mm',
  ('6*', False, (('2', False, (('1', False, ()),)), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'AGH'), ('chi2', 'BCD'), ('alpha1', 'GH'), ('alpha1', 'CD'), ('tcu',)), 1),
   ((('chi2', 'AGH'), ('chi2', 'BCD'), ('alpha1', 'GH'), ('alpha1', 'CD'), ('line', 'AFGH')), 2),
   ((('chi2', 'AGH'),
     ('chi1', 'EF', 'AGH', 'BCD'),
     ('alpha1', 'GH'),
     ('alpha1', 'EF'),
     ('line', 'ABGH')),
    2),
   ((('chi2', 'AGH'),
     ('chi1', 'EF', 'AGH', 'BCD'),
     ('alpha1', 'GH'),
     ('alpha2', 'AFGH'),
     ('line', 'ABGH')),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC'),
     ('line', 'ABCH')),
    1),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC'),
     ('line', 'AFGH')),
    2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha2', 'ABGH'),
     ('line', 'ABCH')),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha2', 'ABGH'),
     ('line', 'AFGH')),
    8),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('alpha2', 'ABGH'),
     ('line', 'ABCH')),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('alpha2', 'ABGH'),
     ('line', 'AFGH')),
    8))),
 ('0m=0e',
  ('6*', False, (('2', False, (('1', False, ()),)), ('3', False, (('2', False, ()),)))),
  (((('phi3', 'AFGH'), ('chi2', 'AGH'), ('alpha1', 'AH'), ('chi2', 'BCD')), 2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    6),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    12),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('chi2', 'CDE'), ('alpha1', 'FG')), 1),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('chi1', 'DE', 'FGH', 'ABC'), ('alpha1', 'FG')), 3),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('chi1', 'DE', 'FGH', 'ABC'), ('alpha1', 'DE')), 1),
   ((('phi2', 'CDE', 'FGH'),
     ('chi1', 'FG', 'ABH', 'CDE'),
     ('chi1', 'DE', 'FGH', 'ABC'),
     ('alpha1', 'DE')),
    3),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('chi1', 'DE', 'FGH', 'ABC'), ('alpha2', 'ABCD')), 2),
   ((('phi2', 'CDE', 'FGH'),
     ('chi1', 'FG', 'ABH', 'CDE'),
     ('chi1', 'DE', 'FGH', 'ABC'),
     ('alpha2', 'ABCD')),
    6))),
 ('Z=Z',
  ('6*',
   False,
   (('1', True, ()), ('1', True, ()), ('3', True, (('1', True, ()), ('1', True, ()))))),
  (((('phi3', 'AFGH'), ('alpha1', 'FG'), ('alpha1', 'AH'), ('alpha1', 'BC'), ('alpha1', 'DE')), 2),
   ((('alpha1', 'FG'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC'),
     ('alpha1', 'DE'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    2),
   ((('alpha1', 'AH'), ('alpha1', 'DE'), ('alpha2', 'ABGH'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    8),
   ((('alpha2', 'ABGH'), ('alpha2', 'ABCD'), ('phi1', ('AH', 'DE'), ('BC', 'FG'))), 8),
   ((('phi2', 'CDE', 'FGH'),
     ('alpha2', 'ABGH'),
     ('alpha2', 'ABCD'),
     ('alpha1', 'GH'),
     ('alpha1', 'CD')),
    16))),
 ('Z=0m',
  ('6*',
   False,
   (('2', False, (('1', False, ()),)), ('3', False, (('1', True, ()), ('1', True, ()))))),
  (((('phi3', 'AFGH'), ('alpha1', 'FG'), ('alpha1', 'AH'), ('chi2', 'BCD'), ('alpha1', 'BC')), 2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha1', 'AH'),
     ('alpha1', 'FG'),
     ('alpha1', 'BC'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha2', 'ABCD'),
     ('alpha1', 'FG'),
     ('alpha1', 'BC'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha1', 'AH'),
     ('alpha2', 'ABGH'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha2', 'ABCD'),
     ('alpha2', 'ABGH'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    8),
   ((('phi2', 'CDE', 'FGH'),
     ('chi2', 'FGH'),
     ('alpha1', 'GH'),
     ('alpha1', 'CD'),
     ('alpha2', 'ABCD')),
    4),
   ((('phi2', 'CDE', 'FGH'),
     ('chi1', 'FG', 'ABH', 'CDE'),
     ('alpha1', 'FG'),
     ('alpha1', 'CD'),
     ('alpha2', 'ABCD')),
    4),
   ((('phi2', 'CDE', 'FGH'),
     ('chi1', 'FG', 'ABH', 'CDE'),
     ('alpha2', 'ABGH'),
     ('alpha1', 'CD'),
     ('alpha2', 'ABCD')),
    8))),
 ('0nmm',
  ('6*',
   False,
   (('2', False, ()), ('2', False, (('1', False, ()),)), ('2', False, (('1', False, ()),)))),
  (((('chi2', 'AGH'),
     ('chi2', 'BCD'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC'),
     ('alpha1', 'EF'),
     ('tcu',)),
    1),
   ((('chi2', 'AGH'),
     ('chi2', 'CDE'),
     ('alpha1', 'AH'),
     ('alpha1', 'CD'),
     ('alpha2', 'AFGH'),
     ('line', 'ABGH')),
    2),
   ((('chi2', 'AGH'),
     ('chi1', 'EF', 'AGH', 'BCD'),
     ('alpha1', 'EF'),
     ('alpha1', 'AH'),
     ('alpha1', 'CD'),
     ('line', 'ABGH')),
    2),
   ((('chi2', 'AGH'),
     ('chi1', 'EF', 'AGH', 'BCD'),
     ('alpha2', 'BCDE'),
     ('alpha1', 'AH'),
     ('alpha1', 'CD'),
     ('line', 'ABGH')),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC'),
     ('alpha1', 'EF'),
     ('line', 'ABCH')),
    1),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'AH'),
     ('alpha1', 'BC')),
    2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('alpha1', 'BC'),
     ('alpha1', 'EF'),
     ('line', 'ABCH')),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('alpha2', 'ABGH'),
     ('alpha1', 'EF'),
     ('line', 'ABCH')),
    4),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('alpha1', 'BC')),
    8),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABCD'),
     ('alpha2', 'CDEF')),
    8))),
 ('0m=0m',
  ('6*',
   False,
   (('2', False, (('1', False, ()),)), ('3', False, (('2', False, (('1', False, ()),)),)))),
  (((('phi3', 'AFGH'), ('chi2', 'AGH'), ('alpha1', 'AH'), ('chi2', 'BCD'), ('alpha1', 'BC')), 2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha1', 'AH'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha1', 'BC'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    2),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha1', 'AH'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABGH'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    8),
   ((('chi1', 'AH', 'BCD', 'EFG'),
     ('alpha2', 'ABCD'),
     ('chi1', 'BC', 'DEF', 'AGH'),
     ('alpha2', 'ABGH'),
     ('phi1', ('AH', 'DE'), ('BC', 'FG'))),
    8),
   ((('phi2', 'CDE', 'FGH'), ('chi2', 'FGH'), ('alpha1', 'GH'), ('chi2', 'CDE'), ('alpha1', 'CD')),
    1),
   ((('phi2', 'CDE', 'FGH'),
     ('chi1', 'FG', 'ABH', 'CDE'),
     ('alpha1', 'FG'),
     ('chi2', 'CDE'),
     ('alpha1', 'CD')),
    2),
   ((('phi2', 'CDE', 'FGH'),
     ('chi1', 'FG', 'ABH', 'CDE'),
     ('alpha1', 'FG'),
     ('chi1', 'DE', 'FGH', 'ABC'),
     ('alpha1', 'DE')),
    1),
   ((('phi2', 'CDE', 'FGH'),
     ('chi1', 'FG', 'ABH', 'CDE'),
     ('alpha1', 'FG'),
     ('chi1', 'DE', 'FGH', 'ABC'),
     ('alpha2', 'ABCD')),
    4),
   ((('phi2', 'CDE', 'FGH'),
     ('chi1', 'FG', 'ABH', 'CDE'),
     ('alpha2', 'ABGH'),
     ('chi2', 'CDE'),
     ('alpha1', 'DE')),
    4),
   ((('phi2', 'CDE', 'FGH'),
     ('chi1', 'FG', 'ABH', 'CDE'),
     ('alpha2', 'ABGH'),
     ('chi1', 'DE', 'FGH', 'ABC'),
     ('alpha2', 'ABCD')),
    4)))]


def _picture(entries):
    from octadred.blocks import PictureElement, _canon_label, FAMILY
    from octadred.decompose import picture_from_elements

    elems = []
    for ent in entries:
        fam = ent[0]
        if fam == "tcu":
            elems.append(PictureElement("tcu", ()))
        elif fam == "phi1":
            from octadred.blocks import _phi1_label
            side1 = frozenset(ent[1])
            side2 = frozenset(ent[2])
            elems.append(PictureElement("phi1", _phi1_label({side1, side2})))
        else:
            kind = {"alpha1": "alpha1a", "alpha2": "alpha2a", "chi1": "chi1a",
                    "chi2": "chi2a", "phi2": "phi2a", "phi3": "phi3a",
                    "line": "line"}[fam]
            if fam == "chi1":
                label = _canon_label(kind, (ent[1], ent[2], ent[3]))
            elif fam == "phi2":
                label = _canon_label(kind, (ent[1], ent[2]))
            else:
                label = _canon_label(kind, (ent[1],))
            from octadred.blocks import _picture_label
            elems.append(PictureElement(fam, _picture_label(kind, label)))
    return picture_from_elements(elems)


@lru_cache(maxsize=None)
def atlas_rows(hyperelliptic: bool):
    """Rows as (type name, subspace-graph tree, ((picture, multiplicity), ...))."""
    data = ATLAS_HE_DATA if hyperelliptic else ATLAS_NH_DATA
    return tuple((name, space, tuple((_picture(p), m) for p, m in pics))
                 for name, space, pics in data)


@lru_cache(maxsize=None)
def DUAL_GRAPHS():
    from octadred.stable_graph import GenusGraph

    out = {}
    for name, (genus, edges) in DUAL_GRAPH_DATA.items():
        out[name] = GenusGraph(tuple(genus),
                               tuple((a, b, None) for a, b in edges))
    return out
