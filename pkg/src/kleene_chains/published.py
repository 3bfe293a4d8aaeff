"""Published reference values: the t/f/u/g table and the root-split sequence lists, verbatim."""

# printed sequence lists, terms n = 1..11 (two known misprints kept verbatim)
PRINTED = {
    "T1": [0, 1, 10, 85, 758, 7066, 68180, 675725, 6840190, 70431982, 735446924],
    "T2": [0, 1, 6, 41, 330, 2882, 26604, 255313, 2521986, 25473638, 261898548],
    "T3": [0, 1, 2, 13, 94, 778, 6916, 64613, 625478, 6219070, 63138652],
    "T4": [0, 1, 4, 27, 212, 1830, 16760, 159963, 1573732, 15846354, 162518600],
    "T5": [0, 1, 8, 63, 544, 4974, 47392, 465519, 4681088, 47952810, 498672736],
    "t": [1, 5, 30, 229, 1938, 17530, 165852, 1621133, 16242474, 165923854, 1721675460],
    "U1": [0, 1, 8, 63, 544, 4974, 47392, 465519, 4681088, 47952810, 498672736],
    "U2": [0, 1, 4, 27, 212, 1830, 16760, 159963, 1573732, 15846354, 16251860],
    "U3": [0, 1, 6, 45, 378, 3402, 32076, 312741, 3127410, 31899582, 330595668],
    "u": [1, 3, 18, 135, 1134, 10206, 96228, 938223, 9382230, 95698746, 9917870040],
}
# (sequence, n) entries of PRINTED that are misprints
MISPRINTS = {("U2", 11): 162518600, ("u", 11): 991787004}

TABLE = {
    "t": [1, 5, 30, 229, 1938, 17530, 165852, 1621133, 16242474],
    "f": [1, 1, 6, 41, 330, 2882, 26604, 255313, 2521986],
    "u": [1, 3, 18, 135, 1134, 10206, 96228, 938223, 9382230],
    "g": [3, 9, 54, 405, 3402, 30618, 288684, 2814669, 28146690],
}
