# Modelo/Referencia.py
#
# Valores de referencia publicados para las isometrías de Gray sobre Z4, Z4^2 y Z8.
# Se usan en la suite de verificación y en las pruebas; no se calculan aquí.

# (x, y) en Z4^2 -> (peso de Lee, imagen binaria, peso de Hamming)
TABLA_PHI_Z4_2 = {
    (0, 0): (0, (0, 0, 0, 0), 0),
    (0, 1): (1, (0, 0, 0, 1), 1),
    (0, 2): (2, (0, 0, 1, 1), 2),
    (0, 3): (1, (0, 0, 1, 0), 1),
    (1, 0): (1, (0, 1, 0, 0), 1),
    (1, 1): (2, (0, 1, 0, 1), 2),
    (1, 2): (3, (0, 1, 1, 1), 3),
    (1, 3): (2, (0, 1, 1, 0), 2),
    (2, 0): (2, (1, 1, 0, 0), 2),
    (2, 1): (3, (1, 1, 0, 1), 3),
    (2, 2): (4, (1, 1, 1, 1), 4),
    (2, 3): (3, (1, 1, 1, 0), 3),
    (3, 0): (1, (1, 0, 0, 0), 1),
    (3, 1): (2, (1, 0, 0, 1), 2),
    (3, 2): (3, (1, 0, 1, 1), 3),
    (3, 3): (2, (1, 0, 1, 0), 2),
}

# phi^-1 restringida a RM(1,2), en el orden psi(0), ..., psi(7)
TABLA_PHI_INVERSA_RM12 = (
    ((0, 0, 0, 0), (0, 0)),
    ((0, 1, 0, 1), (1, 1)),
    ((0, 0, 1, 1), (0, 2)),
    ((0, 1, 1, 0), (1, 3)),
    ((1, 1, 1, 1), (2, 2)),
    ((1, 0, 1, 0), (3, 3)),
    ((1, 1, 0, 0), (2, 0)),
    ((1, 0, 0, 1), (3, 1)),
)

# u en Z8 -> (peso homogéneo, psi(u), peso de Hamming)
TABLA_PSI_Z8 = {
    0: (0, (0, 0, 0, 0), 0),
    1: (2, (0, 1, 0, 1), 2),
    2: (2, (0, 0, 1, 1), 2),
    3: (2, (0, 1, 1, 0), 2),
    4: (4, (1, 1, 1, 1), 4),
    5: (2, (1, 0, 1, 0), 2),
    6: (2, (1, 1, 0, 0), 2),
    7: (2, (1, 0, 0, 1), 2),
}

# u en Z8 -> (peso homogéneo, phi^-1 psi(u), peso de Lee)
TABLA_COMPUESTA_Z8 = {
    0: (0, (0, 0), 0),
    1: (2, (1, 1), 2),
    2: (2, (0, 2), 2),
    3: (2, (1, 3), 2),
    4: (4, (2, 2), 4),
    5: (2, (3, 3), 2),
    6: (2, (2, 0), 2),
    7: (2, (3, 1), 2),
}

# Código de ejemplo sobre Z8 de longitud 3
MATRIZ_EJEMPLO_Z8 = ((1, 2, 7), (0, 2, 4))
TAMANO_EJEMPLO = 32
DISTANCIA_HAMMING_EJEMPLO = 1
DISTANCIA_HOMOGENEA_EJEMPLO = 4

# Palabras de información (6,1) y (7,4) y sus imágenes cuaternarias
PAR_NO_LINEAL = (
    ((6, 1), (6, 6, 6), (2, 0, 2, 0, 2, 0)),
    ((7, 4), (7, 6, 1), (3, 1, 2, 0, 1, 1)),
)
