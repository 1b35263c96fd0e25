import pytest

from Modelo.Verificacion import Chequeo
from Servicios.CodigoServicio import CodigoServicio
from Servicios.VerificacionServicio import VerificacionServicio


@pytest.fixture(scope="module")
def resultados():
    return VerificacionServicio(semilla=2024, matrices_aleatorias=20).ejecutar()


def test_todos_los_chequeos_pasan(resultados):
    fallidos = [c for c in resultados if not c.ok]
    assert not fallidos, fallidos


def test_nombres_y_orden(resultados):
    nombres = [c.nombre for c in resultados]
    assert nombres[:4] == ["table-phi", "table-phi-inverse", "table-psi", "table-composed"]
    assert {"rm1-image-k3", "proposition-i", "proposition-ii", "proposition-iii", "nonlinearity-witness"} <= set(nombres)
    assert len(nombres) == len(set(nombres))


def test_chequeo_con_excepcion_cuenta_como_fallo():
    class Roto(VerificacionServicio):
        def chequeos(self):
            return [("explota", lambda: 1 / 0), ("bien", lambda: Chequeo(nombre="bien", ok=True, detalle=""))]

    resultados = Roto().ejecutar()
    assert [(c.nombre, c.ok) for c in resultados] == [("explota", False), ("bien", True)]
    assert "excepción" in resultados[0].detalle


def test_capacidad_insuficiente_hace_fallar_los_chequeos_del_ejemplo():
    resultados = {c.nombre: c for c in VerificacionServicio(CodigoServicio(capacidad=8), matrices_aleatorias=1).ejecutar()}
    assert resultados["table-phi"].ok
    assert not resultados["example-code"].ok
