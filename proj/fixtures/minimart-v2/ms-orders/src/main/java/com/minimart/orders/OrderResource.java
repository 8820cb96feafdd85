package com.minimart.orders;

import java.util.UUID;
import javax.ws.rs.GET;
import javax.ws.rs.POST;
import javax.ws.rs.PUT;
import javax.ws.rs.Path;
import javax.ws.rs.PathParam;
import javax.ws.rs.Produces;

@Path("/api/v1/orders")
@Produces("application/json")
public class OrderResource {

    private final OrderStore store = new OrderStore();

    @GET
    @Path("/{orderId}")
    public Order get(@PathParam("orderId") UUID orderId) {
        return store.find(orderId);
    }

    @POST
    public Order create(Order order) {
        return store.save(order);
    }

    @PUT
    @Path("/{orderId}/status")
    public Order updateStatus(@PathParam("orderId") UUID orderId, StatusUpdate update) {
        Order order = store.find(orderId);
        order.setStatus(update.status);
        return store.save(order);
    }

    static class StatusUpdate {
        String status;
    }
}
