from pathlib import Path

import pytest

from DAOs.MatrizDAO import MatrizDAO
from Modelo.Anillo import Modulo
from Modelo.Mapa import TipoMapa
from Servicios.CodigoServicio import CodigoServicio

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def ruta_ejemplo() -> Path:
    return FIXTURES / "ejemplo_z8.txt"


@pytest.fixture
def z4() -> Modulo:
    return Modulo(k=2)


@pytest.fixture
def z8() -> Modulo:
    return Modulo(k=3)


@pytest.fixture
def servicio() -> CodigoServicio:
    return CodigoServicio()


@pytest.fixture
def matriz_ejemplo(ruta_ejemplo):
    return MatrizDAO(ruta_ejemplo).leer()


@pytest.fixture
def codigo_ejemplo(servicio, matriz_ejemplo):
    return servicio.enumerate_code(matriz_ejemplo)


@pytest.fixture
def imagen_ejemplo(servicio, codigo_ejemplo):
    return servicio.image_code(codigo_ejemplo, TipoMapa.compuesto(3))
