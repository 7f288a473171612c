#!/usr/bin/env python3
"""Regenerates the toy fixtures in this directory.

The Spanish space is the English space rotated by a fixed orthogonal
matrix, so orthogonal fits on the bundled dictionary recover the rotation
up to the 6-decimal file precision.
"""
import numpy as np

rng = np.random.default_rng(20240817)

EN = ["cat", "dog", "house", "tree", "car", "water",
      "sun", "moon", "book", "fish", "bird", "milk"]
ES = ["gato", "perro", "casa", "arbol", "coche", "agua",
      "sol", "luna", "libro", "pez", "ave", "leche"]
D = 4

vectors = rng.normal(size=(len(EN), D))
vectors /= np.linalg.norm(vectors, axis=1, keepdims=True)

q, _ = np.linalg.qr(rng.normal(size=(D, D)))
rotated = vectors @ q


def write_vec(path, words, mat):
    with open(path, "w") as f:
        f.write(f"{len(words)} {mat.shape[1]}\n")
        for w, row in zip(words, mat):
            f.write(w + " " + " ".join(f"{v:.6f}" for v in row) + "\n")


write_vec("toy_en.vec", EN, vectors)
write_vec("toy_es.vec", ES, rotated)

with open("toy_dict.tsv", "w") as f:
    f.write("# ten of the twelve pairs; bird/ave and milk/leche held out\n")
    for en, es in list(zip(EN, ES))[:10]:
        f.write(f"{en}\t{es}\n")

with open("toy_pairs_mono.tsv", "w") as f:
    f.write("cat dog\tcat dog\n")
    f.write("sun moon\tbook milk\n")
    f.write("the cat drinks milk\twater under the tree\n")
    f.write("house\ttree\n")

with open("toy_pairs_cross.tsv", "w") as f:
    f.write("cat dog\tgato perro\n")
    f.write("sun\tluna\n")
    f.write("water tree\tagua arbol\n")
    f.write("book\tpez\n")

with open("toy_pairs_na.tsv", "w") as f:
    f.write("cat dog\tdog cat\n")
    f.write("\n")
    f.write("sun\tmoon\n")

with open("toy_gold.txt", "w") as f:
    for v in [1.0, 0.2, 0.5, 0.3]:
        f.write(f"{v}\n")

with open("toy_corpus_en.txt", "w") as f:
    f.write("the cat and the dog\n")
    f.write("the sun and the moon\n")
    f.write("a book about a fish\n")
    f.write("milk for the cat\n")
    f.write("water under the tree\n")
    f.write("a car near the house\n")

with open("toy_corpus_es.txt", "w") as f:
    f.write("el gato y el perro\n")
    f.write("el sol y la luna\n")
    f.write("un libro sobre un pez\n")
    f.write("leche para el gato\n")
    f.write("agua bajo el arbol\n")
    f.write("un coche cerca de la casa\n")
