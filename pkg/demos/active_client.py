"""Each client is its own process, created on arrival and gone on departure."""

from pihyflow import NULL_FLOW
from pihyflow.models.active_client import build_active_client, parse_arrivals

office = build_active_client(parse_arrivals("1,1,1,2,4,7,7,9,12,13"), service_time=1.5, service="det")
print(f"{'time':>16}  live  processes")
while not office.next_time().is_infinite:
    t = office.next_time()
    office.output(t)
    office.transition(t, NULL_FLOW)
    print(f"{str(t):>16}  {len(office.procs):>4}  {' '.join(sorted(office.procs))}")
