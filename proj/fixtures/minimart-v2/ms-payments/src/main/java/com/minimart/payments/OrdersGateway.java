package com.minimart.payments;

import java.util.Collections;
import java.util.Map;
import java.util.UUID;

import org.springframework.beans.factory.annotation.Autowired;
import org.springframework.stereotype.Component;
import org.springframework.web.client.RestTemplate;

@Component
public class OrdersGateway {

    @Autowired
    private RestTemplate rest;

    public void markPaid(UUID orderId) {
        Map<String, String> body = Collections.singletonMap("status", "PAID");
        String url = "http://ms-orders/api/v1/orders/" + orderId + "/status";
        rest.put(url, body);
    }

    public UserDto payer(Integer id) {
        return rest.getForObject("http://ms-users/api/v1/users/{id}", UserDto.class, id);
    }
}
