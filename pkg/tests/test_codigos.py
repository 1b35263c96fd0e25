from itertools import product

import numpy as np
import pytest

from Modelo.Anillo import Metrica, Modulo, PalabraAnillo
from Modelo.Codigo import (
    CodigoBloque,
    DesdeGeneradora,
    ImagenBajo,
    MatrizGeneradora,
    TestigoLinealidad,
    VeredictoLinealidad,
)
from Modelo.Errores import ErrorCapacidad
from Modelo.Mapa import TipoMapa
from Servicios.AnilloServicio import add
from Servicios.CodigoServicio import CodigoServicio
from Servicios.GrayServicio import composed_map

Z2 = Modulo(k=1)
Z4 = Modulo(k=2)
Z8 = Modulo(k=3)


def matriz(modulo, *filas):
    return MatrizGeneradora(modulo=modulo, filas=filas)


def conjunto(modulo, *palabras):
    origen = CodigoBloque.desde_palabras(Z8, np.zeros((1, 1)), DesdeGeneradora(matriz(Z8, (0,))))
    return CodigoBloque.desde_palabras(modulo, np.array(palabras), ImagenBajo(TipoMapa.compuesto(3), origen))


# ------------------------------------------------------------
# Matriz generadora y código de bloque
# ------------------------------------------------------------

def test_matriz_valida_forma():
    with pytest.raises(ValueError):
        matriz(Z8)
    with pytest.raises(ValueError):
        matriz(Z8, (1, 2), (1,))
    with pytest.raises(ValueError):
        matriz(Z8, (8,))
    with pytest.raises(ValueError):
        matriz(Z8, ())


def test_codigo_vacio_rechazado():
    with pytest.raises(ValueError):
        CodigoBloque.desde_palabras(Z4, np.zeros((0, 3)), DesdeGeneradora(matriz(Z4, (0, 0, 0))))


def test_codigo_de_matriz_sin_cero_rechazado():
    with pytest.raises(ValueError):
        CodigoBloque.desde_palabras(Z4, np.array([[1, 1]]), DesdeGeneradora(matriz(Z4, (1, 1))))


def test_codigo_es_inmutable_y_ordenado(codigo_ejemplo):
    with pytest.raises(ValueError):
        codigo_ejemplo.palabras[0, 0] = 1
    filas = [tuple(f) for f in codigo_ejemplo.palabras.tolist()]
    assert filas == sorted(filas)
    assert len(set(filas)) == len(filas)


# ------------------------------------------------------------
# Enumeración
# ------------------------------------------------------------

def test_enumerar_ejemplo(codigo_ejemplo):
    assert codigo_ejemplo.tamano == 32
    assert codigo_ejemplo.longitud == 3
    assert codigo_ejemplo.contiene((6, 6, 6))
    assert codigo_ejemplo.contiene((7, 6, 1))
    assert not codigo_ejemplo.contiene((1, 0, 7))


def test_encode_palabras_de_informacion(servicio, matriz_ejemplo):
    assert servicio.encode(matriz_ejemplo, PalabraAnillo(modulo=Z8, valores=(7, 4))).valores == (7, 6, 1)
    assert servicio.encode(matriz_ejemplo, PalabraAnillo(modulo=Z8, valores=(6, 1))).valores == (6, 6, 6)
    with pytest.raises(ValueError):
        servicio.encode(matriz_ejemplo, PalabraAnillo(modulo=Z8, valores=(1,)))


def test_enumerar_matriz_cero(servicio):
    C = servicio.enumerate_code(matriz(Z4, (0, 0, 0)))
    assert C.palabras.tolist() == [[0, 0, 0]]


def test_enumerar_identidad_z8(servicio):
    C = servicio.enumerate_code(matriz(Z8, (1,)))
    assert C.tamano == 8
    assert servicio.min_distance(C, Metrica.HOMOGENEA) == 2


def test_enumerar_supera_capacidad(matriz_ejemplo):
    with pytest.raises(ErrorCapacidad):
        CodigoServicio(capacidad=63).enumerate_code(matriz_ejemplo)
    assert CodigoServicio(capacidad=64).enumerate_code(matriz_ejemplo).tamano == 32


def test_enumerar_por_bloques_coincide(servicio, monkeypatch):
    import Servicios.CodigoServicio as modulo

    G = matriz(Z4, (1, 0, 1, 2), (0, 1, 3, 3), (0, 0, 2, 2))
    completo = servicio.enumerate_code(G)
    monkeypatch.setattr(modulo, "_BLOQUE_ENUMERACION", 5)
    por_bloques = servicio.enumerate_code(G)
    assert np.array_equal(completo.palabras, por_bloques.palabras)


def test_enumerar_es_submodulo(servicio):
    rng = np.random.default_rng(11)
    for _ in range(10):
        G = servicio.random_generator_matrix(rng, Z8, 2, 3)
        C = servicio.enumerate_code(G)
        assert C.tamano <= 64
        m = C.modulo.m
        for a, b in product(C.palabras, repeat=2):
            assert C.contiene((a + b) % m)
        for s in range(m):
            assert all(C.contiene((s * a) % m) for a in C.palabras)


# ------------------------------------------------------------
# Espectros y distancias
# ------------------------------------------------------------

def test_espectro_ejemplo(servicio, codigo_ejemplo):
    hom = servicio.weight_spectrum(codigo_ejemplo, Metrica.HOMOGENEA)
    assert hom.total == 32
    assert hom.histograma[0] == 1
    assert hom.peso_minimo_no_nulo() == 4
    hamming = servicio.weight_spectrum(codigo_ejemplo, Metrica.HAMMING)
    assert hamming.total == 32
    assert hamming.peso_minimo_no_nulo() == 1


def test_espectro_de_cero(servicio):
    C = servicio.enumerate_code(matriz(Z4, (0, 0)))
    for metrica in Metrica:
        assert servicio.weight_spectrum(C, metrica).histograma == {0: 1}


def test_espectro_lee_fuera_de_z4(servicio, codigo_ejemplo):
    with pytest.raises(ValueError):
        servicio.weight_spectrum(codigo_ejemplo, Metrica.LEE)


def test_distancias_ejemplo(servicio, codigo_ejemplo):
    assert servicio.min_distance(codigo_ejemplo, Metrica.HAMMING) == 1
    assert servicio.min_distance(codigo_ejemplo, Metrica.HOMOGENEA) == 4


def test_distancia_requiere_dos_palabras(servicio):
    C = servicio.enumerate_code(matriz(Z8, (0,)))
    with pytest.raises(ValueError):
        servicio.min_distance(C, Metrica.HAMMING)


def test_caminos_lineal_y_por_pares_coinciden(servicio):
    rng = np.random.default_rng(3)
    probados = 0
    for _ in range(60):
        modulo = (Z4, Z8)[int(rng.integers(0, 2))]
        G = servicio.random_generator_matrix(rng, modulo, int(rng.integers(1, 3)), int(rng.integers(1, 5)))
        C = servicio.enumerate_code(G)
        if C.tamano < 2:
            continue
        probados += 1
        metricas = [Metrica.HAMMING, Metrica.HOMOGENEA] + ([Metrica.LEE] if modulo == Z4 else [])
        for metrica in metricas:
            assert servicio.min_distance_linear(C, metrica) == servicio.min_distance_pairwise(C, metrica)
    assert probados > 40


def test_tasas(servicio, matriz_ejemplo, codigo_ejemplo):
    assert servicio.tasa_nominal(matriz_ejemplo) == pytest.approx(2 / 3)
    # log_8 32 / 3 = (5/3) / 3
    assert servicio.tasa_efectiva(codigo_ejemplo) == pytest.approx(5 / 9)


# ------------------------------------------------------------
# Códigos imagen
# ------------------------------------------------------------

def test_imagen_ejemplo(imagen_ejemplo, codigo_ejemplo):
    assert imagen_ejemplo.modulo == Z4
    assert imagen_ejemplo.longitud == 6
    assert imagen_ejemplo.tamano == 32
    assert imagen_ejemplo.contiene((2, 0, 2, 0, 2, 0))
    assert imagen_ejemplo.contiene((3, 1, 2, 0, 1, 1))
    assert isinstance(imagen_ejemplo.procedencia, ImagenBajo)
    assert imagen_ejemplo.procedencia.fuente is codigo_ejemplo


def test_imagen_coincide_con_mapa_palabra_a_palabra(imagen_ejemplo, codigo_ejemplo):
    esperadas = {composed_map(c).valores for c in codigo_ejemplo.palabras_anillo()}
    assert {tuple(f) for f in imagen_ejemplo.palabras.tolist()} == esperadas


def test_imagen_de_codigo_cero(servicio):
    C = servicio.enumerate_code(matriz(Z8, (0, 0, 0)))
    imagen = servicio.image_code(C, TipoMapa.compuesto(3))
    assert imagen.palabras.tolist() == [[0] * 6]


def test_imagen_modulo_incorrecto(servicio, codigo_ejemplo):
    with pytest.raises(ValueError):
        servicio.image_code(codigo_ejemplo, TipoMapa.phi())


def test_imagen_phi_y_phi_inversa(servicio):
    C = servicio.enumerate_code(matriz(Z4, (1, 1), (0, 2)))
    binaria = servicio.image_code(C, TipoMapa.phi())
    assert binaria.modulo == Z2 and binaria.longitud == 4 and binaria.tamano == C.tamano
    de_vuelta = servicio.image_code(binaria, TipoMapa.phi_inversa())
    assert np.array_equal(de_vuelta.palabras, C.palabras)


def test_imagen_phi_inversa_longitud_impar(servicio):
    C = servicio.enumerate_code(matriz(Z2, (1, 1, 1)))
    with pytest.raises(ValueError):
        servicio.image_code(C, TipoMapa.phi_inversa())


def test_imagen_psi_k4(servicio):
    C = servicio.enumerate_code(matriz(Modulo(k=4), (1, 8)))
    imagen = servicio.image_code(C, TipoMapa.psi(4))
    assert imagen.longitud == 16 and imagen.tamano == 16
    assert servicio.min_distance_pairwise(imagen, Metrica.HAMMING) == servicio.min_distance(C, Metrica.HOMOGENEA)


def test_proposicion_ii_y_iii_ejemplo(servicio, codigo_ejemplo, imagen_ejemplo):
    assert servicio.min_distance(imagen_ejemplo, Metrica.LEE) == 4
    assert servicio.min_distance(imagen_ejemplo, Metrica.LEE) == servicio.min_distance(codigo_ejemplo, Metrica.HOMOGENEA)
    assert all(p % 2 == 0 for p in servicio.pesos(imagen_ejemplo, Metrica.LEE))


def test_proposiciones_aleatorias(servicio):
    rng = np.random.default_rng(2024)
    mapa = TipoMapa.compuesto(3)
    probadas = 0
    while probadas < 50:
        G = servicio.random_generator_matrix(rng, Z8, int(rng.integers(1, 3)), int(rng.integers(1, 5)))
        C = servicio.enumerate_code(G)
        if C.tamano < 2:
            continue
        probadas += 1
        imagen = servicio.image_code(C, mapa)
        assert imagen.longitud == 2 * C.longitud
        assert imagen.tamano == C.tamano
        assert servicio.min_distance_pairwise(imagen, Metrica.LEE) == servicio.min_distance(C, Metrica.HOMOGENEA)
        assert all(p % 2 == 0 for p in servicio.pesos(imagen, Metrica.LEE))


# ------------------------------------------------------------
# Linealidad
# ------------------------------------------------------------

def test_imagen_ejemplo_no_lineal(servicio, imagen_ejemplo):
    suma = add(
        PalabraAnillo(modulo=Z4, valores=(2, 0, 2, 0, 2, 0)),
        PalabraAnillo(modulo=Z4, valores=(3, 1, 2, 0, 1, 1)),
    )
    assert suma.valores == (1, 1, 0, 0, 3, 1)
    assert not imagen_ejemplo.contiene(suma)

    veredicto = servicio.check_linearity(imagen_ejemplo)
    assert not veredicto.lineal
    assert veredicto.testigo.verificar(imagen_ejemplo)
    assert not imagen_ejemplo.contiene(veredicto.testigo.resultado)


def test_codigos_de_matriz_son_lineales(servicio, codigo_ejemplo):
    assert servicio.check_linearity(codigo_ejemplo).lineal
    rng = np.random.default_rng(5)
    for _ in range(10):
        G = servicio.random_generator_matrix(rng, Z4, 2, 3)
        assert servicio.check_linearity(servicio.enumerate_code(G)).lineal


def test_testigo_de_suma_para_conjunto_no_cerrado(servicio):
    C = conjunto(Z4, (0, 0), (1, 1))
    veredicto = servicio.check_linearity(C)
    assert not veredicto.lineal
    t = veredicto.testigo
    assert (t.operacion, t.a, t.b, t.resultado) == ("suma", (1, 1), (1, 1), (2, 2))
    assert t.verificar(C)


def test_testigo_sin_palabra_cero(servicio):
    C = conjunto(Z4, (1, 1), (2, 2), (3, 3))
    veredicto = servicio.check_linearity(C)
    assert not veredicto.lineal
    assert veredicto.testigo.verificar(C)
    assert veredicto.testigo.resultado == (0, 0)


def test_conjunto_lineal_sin_procedencia_de_matriz(servicio):
    C = conjunto(Z4, (0, 0), (2, 2), (1, 3), (3, 1))
    assert servicio.check_linearity(C).lineal


def test_imagen_binaria_de_codigo_z4(servicio):
    lineal = servicio.image_code(servicio.enumerate_code(matriz(Z4, (1, 2))), TipoMapa.phi())
    assert servicio.check_linearity(lineal).lineal

    # 2 (u * v) = (0,2,0) no está en C para u = (1,1,0), v = (0,1,1)
    C = servicio.enumerate_code(matriz(Z4, (1, 1, 0), (0, 1, 1)))
    imagen = servicio.image_code(C, TipoMapa.phi())
    veredicto = servicio.check_linearity(imagen)
    assert not veredicto.lineal
    assert veredicto.testigo.operacion == "suma"
    assert veredicto.testigo.verificar(imagen)


def test_veredicto_no_lineal_exige_testigo():
    with pytest.raises(ValueError):
        VeredictoLinealidad(lineal=False)


def test_testigo_falso_no_verifica(imagen_ejemplo):
    falso = TestigoLinealidad(
        operacion="suma", a=(0,) * 6, b=(2, 0, 2, 0, 2, 0), resultado=(2, 0, 2, 0, 2, 0)
    )
    assert not falso.verificar(imagen_ejemplo)
