from itertools import product

import pytest

from Modelo.Anillo import ExpansionBinaria, Metrica, Modulo, PalabraAnillo, PalabraBinaria
from Servicios.AnilloServicio import (
    add,
    distance,
    hamming_weight,
    hom_weight,
    lee_weight,
    negate,
    scalar_mul,
    tabla_pesos,
    two_adic_expansion,
    weight,
)


def palabra(modulo, *valores):
    return PalabraAnillo(modulo=modulo, valores=valores)


# ------------------------------------------------------------
# Módulo y palabras
# ------------------------------------------------------------

def test_modulo_desde_potencia_de_dos():
    assert Modulo.desde_m(8) == Modulo(k=3)
    assert Modulo.desde_m(8).m == 8


@pytest.mark.parametrize("m", [0, 1, 6, 12, 1 << 17])
def test_modulo_rechaza_no_potencias_y_fuera_de_rango(m):
    with pytest.raises(ValueError):
        Modulo.desde_m(m)


def test_palabra_rechaza_residuos_fuera_de_rango(z4):
    with pytest.raises(ValueError):
        palabra(z4, 0, 4)


def test_palabra_vacia_es_neutro_de_la_concatenacion(z8):
    vacia = PalabraAnillo(modulo=z8, valores=())
    w = palabra(z8, 6, 6, 6)
    assert vacia.concatenar(w) == w
    assert w.concatenar(vacia) == w


def test_forma_textual(z8):
    w = PalabraAnillo.desde_texto("6,6,6", z8)
    assert w.valores == (6, 6, 6)
    assert w.texto() == "6,6,6"
    assert PalabraBinaria.desde_texto("0110").bits == (0, 1, 1, 0)
    assert PalabraBinaria(bits=(0, 1, 1, 0)).texto() == "0110"


@pytest.mark.parametrize("texto", ["", "1,,2", "a,b", "1;2"])
def test_forma_textual_mal_formada(texto, z8):
    with pytest.raises(ValueError):
        PalabraAnillo.desde_texto(texto, z8)


def test_palabra_binaria_rechaza_no_bits():
    with pytest.raises(ValueError):
        PalabraBinaria(bits=(0, 2))
    with pytest.raises(ValueError):
        PalabraBinaria.desde_texto("0120")


# ------------------------------------------------------------
# Expansión 2-ádica
# ------------------------------------------------------------

@pytest.mark.parametrize("u,k,bits", [(5, 3, (1, 0, 1)), (0, 3, (0, 0, 0)), (6, 3, (0, 1, 1))])
def test_two_adic_expansion(u, k, bits):
    assert two_adic_expansion(u, k).bits == bits


def test_two_adic_expansion_es_biyeccion():
    for k in range(1, 17):
        expansiones = set()
        for u in range(1 << k):
            e = two_adic_expansion(u, k)
            assert len(e.bits) == k
            assert e.valor() == u
            expansiones.add(e.bits)
        assert len(expansiones) == 1 << k


@pytest.mark.parametrize("u,k", [(8, 3), (-1, 3), (0, 0), (0, 17)])
def test_two_adic_expansion_fuera_de_rango(u, k):
    with pytest.raises(ValueError):
        two_adic_expansion(u, k)


def test_expansion_bit_usa_indices_desde_uno():
    e = ExpansionBinaria(bits=(1, 0, 1))
    assert (e.bit(1), e.bit(2), e.bit(3)) == (1, 0, 1)


# ------------------------------------------------------------
# Pesos
# ------------------------------------------------------------

def test_hamming_weight(z8):
    assert hamming_weight(PalabraBinaria(bits=(0, 1, 1, 0))) == 2
    assert hamming_weight(PalabraBinaria(bits=(0, 0, 0, 0))) == 0
    assert hamming_weight(palabra(z8, 6, 6, 6)) == 3


def test_lee_weight(z4):
    assert [lee_weight(x) for x in range(4)] == [0, 1, 2, 1]
    assert all(lee_weight(x) == min(x, 4 - x) for x in range(4))
    assert lee_weight(palabra(z4, 2, 2)) == 4
    assert lee_weight(palabra(z4, 0, 0)) == 0
    assert lee_weight(palabra(z4, 1, 2, 3)) == 4


def test_lee_weight_solo_en_z4(z8):
    with pytest.raises(ValueError):
        lee_weight(palabra(z8, 1))
    with pytest.raises(ValueError):
        lee_weight(4)


def test_hom_weight_z8():
    assert [hom_weight(x, 3) for x in range(8)] == [0, 2, 2, 2, 4, 2, 2, 2]


def test_hom_weight_palabra(z8):
    assert hom_weight(palabra(z8, 6, 6, 6)) == 6


def test_hom_weight_generalizado():
    assert [hom_weight(x, 2) for x in range(4)] == [0, 1, 2, 1]
    assert hom_weight(8, 4) == 8
    assert hom_weight(3, 4) == 4
    assert [hom_weight(x, 1) for x in range(2)] == [0, 1]


def test_hom_weight_fuera_de_rango():
    with pytest.raises(ValueError):
        hom_weight(8, 3)


def test_pesos_aditivos_bajo_concatenacion(z4):
    for a, b in product(product(range(4), repeat=2), repeat=2):
        u, v = palabra(z4, *a), palabra(z4, *b)
        for metrica in Metrica:
            assert weight(u.concatenar(v), metrica) == weight(u, metrica) + weight(v, metrica)


def test_tabla_pesos(z4, z8):
    assert tabla_pesos(z8, Metrica.HOMOGENEA).tolist() == [0, 2, 2, 2, 4, 2, 2, 2]
    assert tabla_pesos(z4, Metrica.LEE).tolist() == [0, 1, 2, 1]
    assert tabla_pesos(z8, Metrica.HAMMING).tolist() == [0] + [1] * 7
    with pytest.raises(ValueError):
        tabla_pesos(z8, Metrica.LEE)


# ------------------------------------------------------------
# Aritmética
# ------------------------------------------------------------

def test_add_ejemplo(z4):
    suma = add(palabra(z4, 2, 0, 2, 0, 2, 0), palabra(z4, 3, 1, 2, 0, 1, 1))
    assert suma.valores == (1, 1, 0, 0, 3, 1)


def test_scalar_mul(z8):
    assert scalar_mul(7, palabra(z8, 1, 2, 7)).valores == (7, 6, 1)
    assert scalar_mul(0, palabra(z8, 1, 2, 7)) == PalabraAnillo.cero(z8, 3)


def test_add_rechaza_longitud_o_modulo_distintos(z4, z8):
    with pytest.raises(ValueError):
        add(palabra(z4, 1), palabra(z4, 1, 2))
    with pytest.raises(ValueError):
        add(palabra(z4, 1), palabra(z8, 1))


def test_leyes_de_modulo_exhaustivas(z4):
    palabras = [palabra(z4, *v) for v in product(range(4), repeat=2)]
    for a in palabras:
        assert add(a, negate(a)) == PalabraAnillo.cero(z4, 2)
        for b in palabras:
            assert add(a, b) == add(b, a)
            for s in range(4):
                assert scalar_mul(s, add(a, b)) == add(scalar_mul(s, a), scalar_mul(s, b))
            for c in palabras[::3]:
                assert add(add(a, b), c) == add(a, add(b, c))


def test_distancia_es_peso_de_la_diferencia(z8):
    a, b = palabra(z8, 7, 6, 1), palabra(z8, 6, 6, 6)
    # a - b = (1, 0, 3)
    assert distance(a, b, Metrica.HAMMING) == 2
    assert distance(a, b, Metrica.HOMOGENEA) == 4
    assert distance(a, b, Metrica.HOMOGENEA) == distance(b, a, Metrica.HOMOGENEA)
